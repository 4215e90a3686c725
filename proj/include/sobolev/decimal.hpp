#pragma once

#include <string>

namespace sobolev {

/// Decimal string of x with `digits` significant digits, rounded toward
/// -inf (round_up = false) or +inf (round_up = true).
std::string decimal_directed(double x, int digits, bool round_up);

/// Compact two-sided form "0.285244460719_{25}^{39}": shared leading digits
/// followed by the differing tails of the outward-rounded lower and upper
/// bounds.
std::string format_enclosure(double lower, double upper, int digits = 14);

}  // namespace sobolev
