#include "sobolev/domain.hpp"

#include <cmath>

namespace sobolev {

DomainRect::DomainRect(double l1, double l2) : l1_(l1), l2_(l2) {
  if (!(std::isfinite(l1) && std::isfinite(l2) && l1 > 0.0 && l2 > 0.0))
    throw DomainError("rectangle sides must be finite and positive");
}

Interval pi_squared() { return sqr(iv_pi()); }

Interval DomainRect::freq2(int i, int j) const {
  const Interval a = Interval(static_cast<double>(i)) / Interval(l1_);
  const Interval b = Interval(static_cast<double>(j)) / Interval(l2_);
  return sqr(a) + sqr(b);
}

Interval DomainRect::lambda(int i, int j) const { return pi_squared() * freq2(i, j); }

Interval DomainRect::lambda_outside(int n) const {
  return min(lambda(n + 1, 1), lambda(1, n + 1));
}

}  // namespace sobolev
