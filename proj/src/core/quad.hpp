#pragma once

#include <compare>
#include <optional>
#include <string>

namespace rangewalk {

/// Observed quadruple of a stopped walk, in grid units:
/// minimum i <= 0, terminal value x, maximum s >= 0, signature sigma.
/// sigma is +1 when the last strict record was a new maximum, -1 otherwise
/// (at the origin both record ages are equal, which lands on -1).
struct Quad {
  int i = 0;
  int x = 0;
  int s = 0;
  int sigma = -1;

  auto operator<=>(const Quad&) const = default;
};

/// Empty when well-formed; otherwise a human-readable reason.
/// Rules: i <= x <= s, i <= 0 <= s, sigma in {-1,+1}, and the forced
/// signatures: (s>0, i=0) -> +1, (i<0, s=0) -> -1, (i=s=0) -> -1.
inline std::optional<std::string> quad_violation(const Quad& q) {
  if (q.sigma != 1 && q.sigma != -1) return "sigma must be +1 or -1";
  if (q.i > 0) return "minimum must be <= 0";
  if (q.s < 0) return "maximum must be >= 0";
  if (q.i > q.x || q.x > q.s) return "need i <= x <= s";
  if (q.s > 0 && q.i == 0 && q.sigma != 1)
    return "s > 0 with i = 0 forces sigma = +1";
  if (q.i < 0 && q.s == 0 && q.sigma != -1)
    return "i < 0 with s = 0 forces sigma = -1";
  if (q.i == 0 && q.s == 0 && q.sigma != -1)
    return "mass at the origin carries sigma = -1";
  return std::nullopt;
}

inline std::string quad_str(const Quad& q) {
  return "(" + std::to_string(q.i) + "," + std::to_string(q.x) + "," +
         std::to_string(q.s) + "," + (q.sigma > 0 ? "+1" : "-1") + ")";
}

}  // namespace rangewalk
