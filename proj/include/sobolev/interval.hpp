#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <string>

#include "sobolev/errors.hpp"
#include "sobolev/rounding.hpp"

namespace sobolev {

/// Closed interval [lo, hi] with finite binary64 endpoints.
class Interval {
 public:
  constexpr Interval() = default;
  Interval(double x) : lo_(x), hi_(x) {  // NOLINT(google-explicit-constructor)
    if (!std::isfinite(x)) throw DomainError("interval from non-finite value");
  }
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi)) throw DomainError("interval endpoint is NaN");
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw OverflowError("interval endpoint overflow");
    if (lo > hi) throw DomainError("interval with lo > hi");
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  // midpoint and a radius such that [mid - rad, mid + rad] covers the interval
  double mid() const;
  double rad() const;
  double width() const { return rnd::sub_up(hi_, lo_); }
  double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }
  double mig() const {
    if (lo_ <= 0.0 && hi_ >= 0.0) return 0.0;
    return std::min(std::fabs(lo_), std::fabs(hi_));
  }

  bool is_point() const { return lo_ == hi_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool subset_of(const Interval& o) const { return o.contains(*this); }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator-(const Interval& a);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);

inline bool operator==(const Interval& a, const Interval& b) {
  return a.lo() == b.lo() && a.hi() == b.hi();
}

Interval hull(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);  // DomainError if disjoint
Interval abs(const Interval& a);
Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval pow_int(const Interval& a, int k);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
Interval widen(const Interval& a, double r);  // [lo - r, hi + r] outward
Interval inflate_ulps(const Interval& a, int ulps);

/// Rigorous enclosure of pi (two adjacent doubles).
Interval iv_pi();

enum class ArithOp { add, sub, mul, div };
Interval iv_arith(ArithOp op, const Interval& a, const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& a);
std::string to_string(const Interval& a);

}  // namespace sobolev
