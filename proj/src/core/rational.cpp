#include "core/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "core/errors.hpp"

namespace rangewalk {

namespace {

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den))
    throw ParseError("bad rational literal: '" + text + "'");
  Rat r;
  if (r.set_str(num + "/" + den, 10) != 0)
    throw ParseError("bad rational literal: '" + text + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_double(const Rat& r) { return r.get_d(); }

Rat rat_from_double(double x, long max_den) {
  if (max_den < 1) max_den = 1;
  if (!std::isfinite(x)) throw ParseError("cannot approximate non-finite double");
  const bool neg = x < 0;
  double v = neg ? -x : x;

  // Stern-Brocot walk: closest fraction p/q with q <= max_den.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  while (true) {
    const double ipart = std::floor(frac);
    if (ipart > 1e18) break;
    const long a = static_cast<long>(ipart);
    if (q1 != 0 && q0 + a * q1 > max_den) {
      // Largest admissible semiconvergent.
      const long amax = (max_den - q0) / q1;
      const long p2 = p0 + amax * p1, q2 = q0 + amax * q1;
      const double e1 = std::fabs(v - static_cast<double>(p1) / q1);
      const double e2 = q2 > 0 ? std::fabs(v - static_cast<double>(p2) / q2) : 1e300;
      if (q2 > 0 && e2 < e1) { p1 = p2; q1 = q2; }
      break;
    }
    const long p2 = (q1 == 0) ? a : p0 + a * p1;
    const long q2 = (q1 == 0) ? 1 : q0 + a * q1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double rem = frac - ipart;
    if (rem < 1e-15 * std::max(1.0, v)) break;
    frac = 1.0 / rem;
  }
  Rat r(neg ? -p1 : p1, q1 == 0 ? 1 : q1);
  r.canonicalize();
  return r;
}

}  // namespace rangewalk
