#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/consistency.hpp"
#include "core/measure.hpp"
#include "core/trajectory.hpp"

namespace rangewalk {

/// Identifies an extremal cell of the range process: the walk has maximum b,
/// minimum -a, and sits at the extreme named by side.
struct CellKey {
  int side;  // +1 at max, -1 at min
  int a = 0;
  int b = 0;
  auto operator<=>(const CellKey&) const = default;
  int level() const { return a + b; }
};

/// Randomized decision at one cell: stop, or continue to the next new
/// extreme up/down. On stop the terminal value is drawn from x_law.
struct CellRule {
  Rat stop, up, down;
  std::map<int, Rat> x_law;  // terminal value (grid units) -> probability
};

/// Executable stopping rule over the cell chain, the constructive side of
/// the attainability theorem. origin_stop is the mass stopped at t = 0.
struct StoppingRule {
  Rat h;
  Rat origin_stop;
  int max_level = 0;  // cells exist for 0 < a+b <= max_level
  std::map<CellKey, CellRule> cells;

  static StoppingRule from_json(const std::string& json_text);
  static StoppingRule load(const std::string& path);
  std::string to_json() const;
  void save(const std::string& path) const;
};

/// Synthesizes the stopping rule attaining a consistent measure. Throws
/// InconsistentMeasure when check_consistent fails and LeakageError when the
/// cell chain does not absorb all mass (cannot happen for consistent input).
StoppingRule derive_rule(const GridMeasure& m);

/// n independent trajectories; trajectory k is a deterministic function of
/// (seed, k). threads <= 0 picks hardware concurrency.
std::vector<Trajectory> sample(const StoppingRule& rule, std::size_t n,
                               std::uint64_t seed, int threads = 1);

struct FreqTable {
  std::map<Quad, std::uint64_t> counts;
  std::uint64_t total = 0;
};

FreqTable empirical_law(const std::vector<Trajectory>& trajs);

/// Total-variation distance between empirical frequencies and m.
double tv_distance(const FreqTable& freq, const GridMeasure& m);

}  // namespace rangewalk
