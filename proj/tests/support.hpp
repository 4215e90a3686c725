#pragma once

#include <cstdlib>

#include "sobolev/decimal.hpp"
#include "sobolev/interval.hpp"

namespace testing_support {

// Published constants are printed with a fixed number of significant digits.
// A printed value is reproduced when it lies between the outward-rounded
// decimal forms of the enclosure at that many digits.
inline bool printed_within(const sobolev::Interval& x, double printed, int digits = 14) {
  const double lo = std::strtod(sobolev::decimal_directed(x.lo(), digits, false).c_str(), nullptr);
  const double hi = std::strtod(sobolev::decimal_directed(x.hi(), digits, true).c_str(), nullptr);
  return lo <= printed && printed <= hi;
}

}  // namespace testing_support
