#pragma once

#include "sobolev/interval.hpp"

namespace sobolev {

/// Enclosure of ln Gamma on arguments >= 12 (Stirling series with a bounded
/// remainder).
Interval lgamma_stirling(const Interval& y);

/// Enclosure of {Gamma(x) : x in a} for a.lo > 0.
Interval iv_gamma(const Interval& a);

}  // namespace sobolev
