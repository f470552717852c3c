#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "core/quad.hpp"
#include "core/rational.hpp"

namespace rangewalk {

/// Finitely supported probability measure on quadruples with exact rational
/// weights. Grid values are integers in units of the step h; h carries the
/// price scale only. Immutable after construction.
class GridMeasure {
 public:
  /// Validates support rules, strict positivity and total mass 1.
  GridMeasure(Rat h, std::map<Quad, Rat> atoms);

  static GridMeasure from_json(const std::string& json_text);
  static GridMeasure load(const std::string& path);
  std::string to_json() const;
  void save(const std::string& path) const;

  const Rat& h() const { return h_; }
  const std::map<Quad, Rat>& atoms() const { return atoms_; }

  int max_s() const { return max_s_; }
  int min_i() const { return min_i_; }
  /// Support box width max(S) - min(I) in grid units.
  int range() const { return max_s_ - min_i_; }

  Rat prob(const Quad& q) const;

 private:
  Rat h_;
  std::map<Quad, Rat> atoms_;
  int max_s_ = 0;
  int min_i_ = 0;
};

/// Projection onto (s, x); mass preserving.
std::map<std::pair<int, int>, Rat> marginal_sx(const GridMeasure& m);

/// Exact expectation of f over the support.
Rat expectation(const GridMeasure& m,
                const std::function<Rat(const Quad&)>& f);

/// Expectation restricted to an event: sum of f(q) m(q) over {pred}.
Rat expectation_on(const GridMeasure& m,
                   const std::function<bool(const Quad&)>& pred,
                   const std::function<Rat(const Quad&)>& f);

/// Mass of an event.
Rat mass_on(const GridMeasure& m,
            const std::function<bool(const Quad&)>& pred);

}  // namespace rangewalk
