#include "core/consistency.hpp"

#include <json.hpp>

#include "core/errors.hpp"

namespace rangewalk {

using nlohmann::json;

Rat phi(const GridMeasure& m, int b, int a, Orientation o) {
  if (a < 0 || b < 0) throw DegenerateWindow("phi needs a, b >= 0");
  if (a + b == 0) throw DegenerateWindow("phi window (0,0) is degenerate");
  Rat acc = 0;
  for (const auto& [q, p] : m.atoms()) {
    if (q.s < b && q.i > -a) {
      // strict window event {S < b, I > -a}
      acc += (o == Orientation::plus ? Rat(a + q.x) : Rat(b - q.x)) * p;
    }
  }
  const Rat num = (o == Orientation::plus ? Rat(a) : Rat(b)) - acc;
  return num / Rat(a + b);
}

Rat psi(const GridMeasure& m, int a, int b, Side side) {
  if (side == Side::plus)
    return phi(m, b, a + 1, Orientation::plus) - phi(m, b, a, Orientation::plus);
  return phi(m, b + 1, a, Orientation::minus) - phi(m, b, a, Orientation::minus);
}

CellStats cell_stats(const GridMeasure& m, Side side, int a, int b) {
  if (a < 0 || b < 0 || a + b == 0)
    throw DegenerateWindow("cell_stats needs a, b >= 0 with a+b > 0");
  CellStats st;
  st.side = side;
  st.a = a;
  st.b = b;
  st.psi = psi(m, a, b, side);
  st.rhs_he1 = st.psi;

  const int sgn = side_sign(side);
  Rat p0 = 0, mx = 0;
  for (const auto& [q, p] : m.atoms()) {
    if (q.s == b && q.i == -a && q.sigma == sgn) {
      p0 += p;
      mx += Rat(q.x) * p;
    }
  }
  st.p0 = p0;
  // Integrand b+1-X (plus) resp. a+1+X (minus) over the cell.
  st.lhs_he1 = side == Side::plus ? Rat(b + 1) * p0 - mx : Rat(a + 1) * p0 + mx;
  if (p0 > 0) st.v = mx / p0;
  if (st.psi > 0) {
    // theta = (p0/psi) * (b+1-v) for +, (a+1+v) for -; division-free via mx.
    st.theta = st.lhs_he1 / st.psi;
  }
  return st;
}

ConsistencyReport check_consistent(const GridMeasure& m) {
  ConsistencyReport rep;
  rep.checked_box = m.range() + 1;
  for (int n = 1; n <= rep.checked_box; ++n) {
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      for (Side side : {Side::plus, Side::minus}) {
        CellStats st = cell_stats(m, side, a, b);
        if (st.lhs_he1 > st.rhs_he1)
          rep.violations.push_back({side, a, b, st.lhs_he1, st.rhs_he1});
      }
    }
  }
  rep.consistent = rep.violations.empty();
  return rep;
}

std::string report_json(const ConsistencyReport& r) {
  json v = json::array();
  for (const auto& viol : r.violations) {
    v.push_back({{"side", side_sign(viol.side)},
                 {"a", viol.a},
                 {"b", viol.b},
                 {"lhs", rat_str(viol.lhs)},
                 {"rhs", rat_str(viol.rhs)}});
  }
  json j{{"consistent", r.consistent},
         {"checked_box", r.checked_box},
         {"violations", v}};
  return j.dump(2);
}

SxReport check_sx(const std::map<std::pair<int, int>, Rat>& mu, SxMode mode) {
  SxReport rep;
  int max_s = 0;
  Rat mean_x = 0;
  for (const auto& [sx, p] : mu) {
    const auto [s, x] = sx;
    if (s < 0 || s < x)
      throw SupportError("marginal atom (s=" + std::to_string(s) +
                         ", x=" + std::to_string(x) + ") needs s >= max(x, 0)");
    if (p <= 0) throw SupportError("marginal probabilities must be > 0");
    max_s = std::max(max_s, s);
    mean_x += Rat(x) * p;
  }
  rep.mean_x = mean_x;

  for (int b = 1; b <= max_s; ++b) {
    Rat lhs = 0, rhs = 0;
    for (const auto& [sx, p] : mu) {
      const auto [s, x] = sx;
      if (s >= b) {
        lhs += Rat(b) * p;
        rhs += Rat(x) * p;
      }
    }
    const bool ok =
        mode == SxMode::stopped ? lhs >= rhs : lhs == rhs;
    rep.levels.push_back({b, lhs, rhs, ok});
  }

  rep.pass = true;
  for (const auto& lv : rep.levels) rep.pass = rep.pass && lv.ok;
  if (mode == SxMode::uniformly_integrable && mean_x != 0) rep.pass = false;
  rep.note =
      "lattice adaptation: events use non-strict {S >= b} in place of the "
      "continuum's strict {S > b}";
  return rep;
}

std::string sx_report_json(const SxReport& r) {
  json lv = json::array();
  for (const auto& l : r.levels) {
    lv.push_back({{"b", l.b},
                  {"b_mu_S_ge_b", rat_str(l.lhs)},
                  {"mu_X_S_ge_b", rat_str(l.rhs)},
                  {"ok", l.ok}});
  }
  json j{{"pass", r.pass},
         {"mean_x", rat_str(r.mean_x)},
         {"levels", lv},
         {"note", r.note}};
  return j.dump(2);
}

}  // namespace rangewalk
