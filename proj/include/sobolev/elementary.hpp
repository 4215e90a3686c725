#pragma once

#include "sobolev/interval.hpp"

namespace sobolev {

// Elementary functions with correctly rounded endpoints (MPFR at 53 bits,
// round toward -inf for lo and +inf for hi).
Interval exp(const Interval& a);
Interval log(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
/// x^y for x.lo > 0 and any real interval y.
Interval pow(const Interval& x, const Interval& y);
Interval pow_real(const Interval& x, double y);

/// num / den as a tight enclosure.
Interval rational(long long num, long long den);

enum class ElemFn { sqrt, exp, ln, sin, cos, pow_real, pow_int };
/// Single entry point used by the CLI and the property tests. `param` is the
/// exponent for pow_real / pow_int and ignored otherwise.
Interval iv_elem(ElemFn fn, const Interval& a, double param = 0.0);

}  // namespace sobolev
