#pragma once

#include "sobolev/interval.hpp"

namespace sobolev {

/// Axis-aligned rectangle (0, L1) x (0, L2).
class DomainRect {
 public:
  DomainRect() = default;
  DomainRect(double l1, double l2);

  double L1() const { return l1_; }
  double L2() const { return l2_; }
  Interval measure() const { return Interval(l1_) * Interval(l2_); }
  /// L1 L2 / 4, the squared L2 norm of every sine mode.
  Interval mode_weight() const { return measure() * Interval(0.25); }
  /// pi^2 (i^2 / L1^2 + j^2 / L2^2)
  Interval lambda(int i, int j) const;
  /// i^2 / L1^2 + j^2 / L2^2 (lambda without the pi^2 factor)
  Interval freq2(int i, int j) const;
  /// Smallest lambda_ij over modes with i > n or j > n.
  Interval lambda_outside(int n) const;
  bool is_square() const { return l1_ == l2_; }

  bool operator==(const DomainRect& o) const { return l1_ == o.l1_ && l2_ == o.l2_; }

 private:
  double l1_ = 1.0, l2_ = 1.0;
};

Interval pi_squared();

}  // namespace sobolev
