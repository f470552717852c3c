#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/measure.hpp"

namespace rangewalk {

/// Which exit-window probability phi computes.
enum class Orientation {
  plus,   // phi(b,-a): would-be probability of hitting b before -a
  minus,  // phi(-a,b): would-be probability of hitting -a before b
};

/// Extremal-state side: +1 = walk sits at its maximum, -1 = at its minimum.
enum class Side : int { plus = +1, minus = -1 };

inline int side_sign(Side s) { return static_cast<int>(s); }
inline Side side_of(int sign) { return sign >= 0 ? Side::plus : Side::minus; }
inline const char* side_str(Side s) { return s == Side::plus ? "+" : "-"; }

/// phi(b,-a) = (a - m(a+X; S<b, I>-a)) / (a+b)     (plus)
/// phi(-a,b) = (b - m(b-X; S<b, I>-a)) / (a+b)     (minus)
/// Events are strict, values in grid units (h = 1). Throws DegenerateWindow
/// when a+b = 0.
Rat phi(const GridMeasure& m, int b, int a, Orientation o);

/// psi_+(-a,b) = phi(b,-a-1) - phi(b,-a);  psi_-(-a,b) = phi(-a,b+1) - phi(-a,b).
/// For consistent m this is the probability of reaching level b (resp. -a)
/// before stopping while the opposite extreme sits exactly at -a (resp. b).
Rat psi(const GridMeasure& m, int a, int b, Side side);

/// Derived statistics of the extremal cell {S=b, I=-a, sigma=side}, all in
/// grid units (h = 1). A cell's stop condition reads lhs_he1 <= rhs_he1.
struct CellStats {
  Side side = Side::plus;
  int a = 0;
  int b = 0;
  Rat psi;                  // reach probability expression
  Rat p0;                   // mass of the cell
  std::optional<Rat> v;     // conditional terminal mean; empty iff p0 = 0
  std::optional<Rat> theta; // barrier randomization weight; empty iff psi = 0
  Rat lhs_he1;              // m(b+1-X; cell) for +, m(a+1+X; cell) for -
  Rat rhs_he1;              // psi
};

CellStats cell_stats(const GridMeasure& m, Side side, int a, int b);

struct Violation {
  Side side;
  int a, b;
  Rat lhs, rhs;
};

struct ConsistencyReport {
  bool consistent = false;
  std::vector<Violation> violations;
  int checked_box = 0;  // largest a+b examined
};

/// Full decision procedure: lhs_he1 <= rhs_he1 for both sides over every
/// window with 0 < a+b <= range+1. Support rules are enforced at load, so a
/// valid GridMeasure passing this check is attainable by a stopping rule.
ConsistencyReport check_consistent(const GridMeasure& m);

std::string report_json(const ConsistencyReport& r);

/// (S, X)-marginal checks.
enum class SxMode { stopped, uniformly_integrable };

struct SxLevelCheck {
  int b;
  Rat lhs;  // b * mu(S >= b)
  Rat rhs;  // mu(X; S >= b)
  bool ok;
};

struct SxReport {
  bool pass = false;
  std::vector<SxLevelCheck> levels;
  Rat mean_x;
  std::string note;
};

/// stopped: b mu(S>=b) >= mu(X; S>=b) for every b > 0 in range.
/// uniformly_integrable: equality for every such b, plus mu(X) = 0.
/// Throws SupportError when some atom has s < max(x, 0) or s < 0.
SxReport check_sx(const std::map<std::pair<int, int>, Rat>& mu, SxMode mode);

std::string sx_report_json(const SxReport& r);

}  // namespace rangewalk
