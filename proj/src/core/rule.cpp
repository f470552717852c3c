#include "core/rule.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/oracle.hpp"

namespace rangewalk {

using nlohmann::json;

StoppingRule derive_rule(const GridMeasure& m) {
  const ConsistencyReport rep = check_consistent(m);
  if (!rep.consistent) {
    const auto& v = rep.violations.front();
    throw InconsistentMeasure(
        "measure fails the stop condition at (" + std::string(side_str(v.side)) +
        ", a=" + std::to_string(v.a) + ", b=" + std::to_string(v.b) +
        "): " + rat_str(v.lhs) + " > " + rat_str(v.rhs));
  }

  StoppingRule rule;
  rule.h = m.h();
  rule.origin_stop = m.prob(Quad{0, 0, 0, -1});
  rule.max_level = m.range();

  for (int n = 1; n <= rule.max_level; ++n) {
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      for (Side side : {Side::plus, Side::minus}) {
        const int sgn = side_sign(side);
        CellRule cr;

        Rat p0 = 0, mx = 0;
        std::map<int, Rat> cell_atoms;
        for (const auto& [q, p] : m.atoms()) {
          if (q.s == b && q.i == -a && q.sigma == sgn) {
            p0 += p;
            mx += Rat(q.x) * p;
            cell_atoms[q.x] = p;
          }
        }

        const Rat ps = psi(m, a, b, side);
        const Rat denom(n + 2);
        if (ps > 0) {
          const Rat t0 = p0 / ps;    // conditional stop probability
          const Rat vt0 = mx / ps;   // equals v * t0 without needing p0 > 0
          cr.stop = t0;
          if (side == Side::plus) {
            cr.up = (Rat(n + 1) - Rat(a + 1) * t0 - vt0) / denom;
            cr.down = (Rat(1) - Rat(b + 1) * t0 + vt0) / denom;
          } else {
            cr.down = (Rat(n + 1) - Rat(b + 1) * t0 + vt0) / denom;
            cr.up = (Rat(1) - Rat(a + 1) * t0 - vt0) / denom;
          }
          for (auto& [x, p] : cell_atoms) cr.x_law[x] = p / p0;
        } else {
          // Unreachable under m; keep the sampler total with the natural
          // two-barrier continuation split.
          cr.stop = 0;
          if (side == Side::plus) {
            cr.up = Rat(n + 1) / denom;
            cr.down = Rat(1) / denom;
          } else {
            cr.down = Rat(n + 1) / denom;
            cr.up = Rat(1) / denom;
          }
        }

        if (cr.stop < 0 || cr.up < 0 || cr.down < 0 ||
            cr.stop + cr.up + cr.down != 1)
          throw InconsistentMeasure(
              "cell split out of range at (" + std::string(side_str(side)) +
              ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");

        rule.cells[{sgn, a, b}] = std::move(cr);
      }
    }
  }

  // Total absorbed mass must be exactly 1; anything else means the chain
  // leaks past the support range.
  const GridMeasure absorbed = chain_law(rule);
  if (absorbed.atoms() != m.atoms())
    throw LeakageError("derived rule does not reproduce the measure");
  return rule;
}

std::string StoppingRule::to_json() const {
  json cells_j = json::array();
  for (const auto& [key, cr] : cells) {
    json xs = json::array();
    for (const auto& [x, p] : cr.x_law)
      xs.push_back({{"x", x}, {"p", rat_str(p)}});
    cells_j.push_back({{"side", key.side},
                       {"a", key.a},
                       {"b", key.b},
                       {"stop", rat_str(cr.stop)},
                       {"up", rat_str(cr.up)},
                       {"down", rat_str(cr.down)},
                       {"x_law", xs}});
  }
  json j{{"h", rat_str(h)},
         {"origin_stop", rat_str(origin_stop)},
         {"max_level", max_level},
         {"cells", cells_j}};
  return j.dump(2);
}

StoppingRule StoppingRule::from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("rule JSON: ") + e.what());
  }
  try {
    StoppingRule rule;
    rule.h = rat_parse(j.at("h").get<std::string>());
    rule.origin_stop = rat_parse(j.at("origin_stop").get<std::string>());
    rule.max_level = j.at("max_level").get<int>();
    for (const auto& c : j.at("cells")) {
      CellKey key{c.at("side").get<int>(), c.at("a").get<int>(),
                  c.at("b").get<int>()};
      CellRule cr;
      cr.stop = rat_parse(c.at("stop").get<std::string>());
      cr.up = rat_parse(c.at("up").get<std::string>());
      cr.down = rat_parse(c.at("down").get<std::string>());
      for (const auto& e : c.at("x_law"))
        cr.x_law[e.at("x").get<int>()] = rat_parse(e.at("p").get<std::string>());
      if (cr.stop < 0 || cr.up < 0 || cr.down < 0 ||
          cr.stop + cr.up + cr.down != 1)
        throw ParseError("cell split must be a probability vector");
      rule.cells[key] = std::move(cr);
    }
    return rule;
  } catch (const json::exception& e) {
    throw ParseError(std::string("rule JSON: ") + e.what());
  }
}

StoppingRule StoppingRule::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void StoppingRule::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot write " + tmp);
    out << to_json() << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw IoError("cannot move " + tmp + " to " + path);
}

}  // namespace rangewalk
