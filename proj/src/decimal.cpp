#include "sobolev/decimal.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "sobolev/errors.hpp"

namespace sobolev {

std::string decimal_directed(double x, int digits, bool round_up) {
  if (!std::isfinite(x)) throw FormatError("cannot format a non-finite value");
  if (digits < 1 || digits > 40) throw FormatError("digit count out of range");
  if (x == 0.0) return "0";
  mpfr_t v;
  mpfr_init2(v, 53);
  mpfr_set_d(v, x, MPFR_RNDN);
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v, round_up ? MPFR_RNDU : MPFR_RNDD);
  mpfr_clear(v);
  std::string mant(s);
  mpfr_free_str(s);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^e
  std::string out;
  if (e <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
  } else if (static_cast<std::size_t>(e) >= mant.size()) {
    out = mant + std::string(static_cast<std::size_t>(e) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(e)) + "." + mant.substr(static_cast<std::size_t>(e));
  }
  return sign + out;
}

std::string format_enclosure(double lower, double upper, int digits) {
  if (lower > upper) throw FormatError("lower bound exceeds upper bound");
  const std::string lo = decimal_directed(lower, digits, false);
  const std::string hi = decimal_directed(upper, digits, true);
  if (lo.size() != hi.size()) return "[" + lo + ", " + hi + "]";
  std::size_t k = 0;
  while (k < lo.size() && lo[k] == hi[k]) ++k;
  if (k == lo.size()) return lo;
  return lo.substr(0, k) + "_{" + lo.substr(k) + "}^{" + hi.substr(k) + "}";
}

}  // namespace sobolev
