#include "core/measure.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace rangewalk {

using nlohmann::json;

GridMeasure::GridMeasure(Rat h, std::map<Quad, Rat> atoms)
    : h_(std::move(h)), atoms_(std::move(atoms)) {
  if (h_ <= 0) throw SupportError("grid step h must be positive");
  if (atoms_.empty()) throw MassError("measure has no atoms");
  Rat total = 0;
  bool first = true;
  for (const auto& [q, p] : atoms_) {
    if (auto why = quad_violation(q))
      throw SupportError("atom " + quad_str(q) + ": " + *why);
    if (p <= 0)
      throw SupportError("atom " + quad_str(q) + ": probability must be > 0");
    total += p;
    if (first || q.s > max_s_) max_s_ = q.s;
    if (first || q.i < min_i_) min_i_ = q.i;
    first = false;
  }
  if (total != 1)
    throw MassError("total mass is " + rat_str(total) + ", expected 1");
}

Rat GridMeasure::prob(const Quad& q) const {
  auto it = atoms_.find(q);
  return it == atoms_.end() ? Rat(0) : it->second;
}

GridMeasure GridMeasure::from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("measure JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("h") || !j.contains("atoms"))
      throw ParseError("measure JSON needs fields 'h' and 'atoms'");
    const Rat h = rat_parse(j.at("h").get<std::string>());
    std::map<Quad, Rat> atoms;
    for (const auto& a : j.at("atoms")) {
      Quad q{a.at("i").get<int>(), a.at("x").get<int>(), a.at("s").get<int>(),
             a.at("sigma").get<int>()};
      Rat p = rat_parse(a.at("p").get<std::string>());
      if (atoms.count(q))
        throw ParseError("duplicate atom " + quad_str(q));
      atoms.emplace(q, std::move(p));
    }
    return GridMeasure(h, std::move(atoms));
  } catch (const json::exception& e) {
    throw ParseError(std::string("measure JSON: ") + e.what());
  }
}

GridMeasure GridMeasure::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string GridMeasure::to_json() const {
  json atoms = json::array();
  for (const auto& [q, p] : atoms_) {
    atoms.push_back({{"i", q.i},
                     {"x", q.x},
                     {"s", q.s},
                     {"sigma", q.sigma},
                     {"p", rat_str(p)}});
  }
  json j{{"h", rat_str(h_)}, {"atoms", atoms}};
  return j.dump(2);
}

void GridMeasure::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot write " + tmp);
    out << to_json() << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw IoError("cannot move " + tmp + " to " + path);
}

std::map<std::pair<int, int>, Rat> marginal_sx(const GridMeasure& m) {
  std::map<std::pair<int, int>, Rat> out;
  for (const auto& [q, p] : m.atoms()) out[{q.s, q.x}] += p;
  return out;
}

Rat expectation(const GridMeasure& m,
                const std::function<Rat(const Quad&)>& f) {
  Rat acc = 0;
  for (const auto& [q, p] : m.atoms()) acc += f(q) * p;
  return acc;
}

Rat expectation_on(const GridMeasure& m,
                   const std::function<bool(const Quad&)>& pred,
                   const std::function<Rat(const Quad&)>& f) {
  Rat acc = 0;
  for (const auto& [q, p] : m.atoms())
    if (pred(q)) acc += f(q) * p;
  return acc;
}

Rat mass_on(const GridMeasure& m,
            const std::function<bool(const Quad&)>& pred) {
  Rat acc = 0;
  for (const auto& [q, p] : m.atoms())
    if (pred(q)) acc += p;
  return acc;
}

}  // namespace rangewalk
