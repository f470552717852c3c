#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "core/quad.hpp"

namespace rangewalk {

/// Sequence of new-extreme events of one run of the stopped walk, plus the
/// terminal value. Events are grid levels: +k records a new maximum k,
/// -k a new minimum -k. The range expands by exactly one grid step per event,
/// so new maxima appear as 1, 2, 3, ... and new minima as -1, -2, -3, ...
/// An empty event list is the walk stopped at the origin (x = 0, sigma = -1).
struct Trajectory {
  std::vector<int> extremes;
  int x = 0;
  int sigma = -1;
};

inline Quad quad_of(const Trajectory& t) {
  Quad q;
  for (int e : t.extremes) {
    if (e > 0) q.s = std::max(q.s, e);
    else q.i = std::min(q.i, e);
  }
  q.x = t.x;
  q.sigma = t.sigma;
  return q;
}

inline std::optional<std::string> trajectory_violation(const Trajectory& t) {
  int s = 0, i = 0;
  for (int e : t.extremes) {
    if (e == 0) return "level 0 is not a new extreme";
    if (e > 0 && e != s + 1) return "new maximum must extend the range by 1";
    if (e < 0 && e != i - 1) return "new minimum must extend the range by 1";
    (e > 0 ? s : i) = e;
  }
  if (t.x < i || t.x > s) return "terminal value outside [min, max]";
  const int want_sigma = t.extremes.empty() ? -1 : (t.extremes.back() > 0 ? 1 : -1);
  if (t.sigma != want_sigma) return "sigma must match the last extreme";
  return std::nullopt;
}

constexpr int kNotHit = std::numeric_limits<int>::max();

/// Time rank of the first visit to a grid level: -1 for level 0 (the start),
/// the event index for a recorded extreme, kNotHit when never reached.
inline int hit_rank(const Trajectory& t, int level) {
  if (level == 0) return -1;
  for (std::size_t k = 0; k < t.extremes.size(); ++k)
    if (t.extremes[k] == level) return static_cast<int>(k);
  return kNotHit;
}

/// Mirror image: maxima and minima swap, terminal value and signature flip.
inline Trajectory reflect(const Trajectory& t) {
  Trajectory r;
  r.extremes.reserve(t.extremes.size());
  for (int e : t.extremes) r.extremes.push_back(-e);
  r.x = -t.x;
  r.sigma = t.extremes.empty() ? -1 : -t.sigma;
  return r;
}

}  // namespace rangewalk
