#include "sobolev/interval.hpp"

#include <cstdio>
#include <ostream>

namespace sobolev {

using namespace rnd;

double Interval::mid() const {
  if (lo_ == hi_) return lo_;
  // halve first so that lo + hi cannot overflow
  double m = 0.5 * lo_ + 0.5 * hi_;
  return std::clamp(m, lo_, hi_);
}

double Interval::rad() const {
  const double m = mid();
  return std::max(sub_up(m, lo_), sub_up(hi_, m));
}

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi()));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(sub_down(a.lo(), b.hi()), sub_up(a.hi(), b.lo()));
}

Interval operator*(const Interval& a, const Interval& b) {
  const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
  if (al >= 0.0) {
    if (bl >= 0.0) return Interval(mul_down(al, bl), mul_up(ah, bh));
    if (bh <= 0.0) return Interval(mul_down(ah, bl), mul_up(al, bh));
    return Interval(mul_down(ah, bl), mul_up(ah, bh));
  }
  if (ah <= 0.0) {
    if (bl >= 0.0) return Interval(mul_down(al, bh), mul_up(ah, bl));
    if (bh <= 0.0) return Interval(mul_down(ah, bh), mul_up(al, bl));
    return Interval(mul_down(al, bh), mul_up(al, bl));
  }
  if (bl >= 0.0) return Interval(mul_down(al, bh), mul_up(ah, bh));
  if (bh <= 0.0) return Interval(mul_down(ah, bl), mul_up(al, bl));
  return Interval(std::min(mul_down(al, bh), mul_down(ah, bl)),
                  std::max(mul_up(al, bl), mul_up(ah, bh)));
}

Interval operator/(const Interval& a, const Interval& b) {
  const double bl = b.lo(), bh = b.hi();
  if (bl <= 0.0 && bh >= 0.0) throw DivisionByZeroInterval("division by an interval containing 0");
  const double al = a.lo(), ah = a.hi();
  if (bl > 0.0) {
    if (al >= 0.0) return Interval(div_down(al, bh), div_up(ah, bl));
    if (ah <= 0.0) return Interval(div_down(al, bl), div_up(ah, bh));
    return Interval(div_down(al, bl), div_up(ah, bl));
  }
  if (al >= 0.0) return Interval(div_down(ah, bh), div_up(al, bl));
  if (ah <= 0.0) return Interval(div_down(ah, bl), div_up(al, bh));
  return Interval(div_down(ah, bh), div_up(al, bh));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.intersects(b)) throw DomainError("intersection of disjoint intervals");
  return Interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval abs(const Interval& a) {
  if (a.lo() >= 0.0) return a;
  if (a.hi() <= 0.0) return -a;
  return Interval(0.0, a.mag());
}

Interval sqr(const Interval& a) {
  const double m = a.mig(), M = a.mag();
  return Interval(mul_down(m, m), mul_up(M, M));
}

Interval sqrt(const Interval& a) {
  if (a.lo() < 0.0) throw DomainError("sqrt of interval with negative part");
  return Interval(sqrt_down(a.lo()), sqrt_up(a.hi()));
}

Interval pow_int(const Interval& a, int k) {
  if (k < 0) return Interval(1.0) / pow_int(a, -k);
  if (k == 0) return Interval(1.0);
  if (k % 2 == 0) {
    // even powers are monotone in |a|
    const Interval m = abs(a);
    double lo = 1.0, hi = 1.0;
    for (int i = 0; i < k; ++i) {
      lo = mul_down(lo, m.lo());
      hi = mul_up(hi, m.hi());
    }
    return Interval(lo, hi);
  }
  // odd powers are monotone increasing
  auto down = [&](double x) {
    if (x >= 0.0) {
      double r = 1.0;
      for (int i = 0; i < k; ++i) r = mul_down(r, x);
      return r;
    }
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = mul_up(r, -x);
    return -r;
  };
  auto up = [&](double x) { return -down(-x); };
  return Interval(down(a.lo()), up(a.hi()));
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval widen(const Interval& a, double r) {
  return Interval(sub_down(a.lo(), r), add_up(a.hi(), r));
}

Interval inflate_ulps(const Interval& a, int ulps) {
  double lo = a.lo(), hi = a.hi();
  for (int i = 0; i < ulps; ++i) {
    lo = next_down(lo);
    hi = next_up(hi);
  }
  return Interval(lo, hi);
}

Interval iv_pi() { return Interval(0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1); }

Interval iv_arith(ArithOp op, const Interval& a, const Interval& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("unknown arithmetic op");
}

std::string to_string(const Interval& a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", a.lo(), a.hi());
  return buf;
}

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a); }

}  // namespace sobolev
