#pragma once

#include <gmpxx.h>
#include <string>

namespace rangewalk {

/// Exact rational number: reduced numerator/denominator, denominator > 0.
using Rat = mpq_class;

/// Parse "num" or "num/den" (den > 0 after reduction). Throws ParseError.
Rat rat_parse(const std::string& text);

/// Canonical text form: "num" when den == 1, else "num/den".
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

/// Best rational approximation with denominator <= max_den
/// (continued-fraction convergents/semiconvergents).
Rat rat_from_double(double x, long max_den);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace rangewalk
