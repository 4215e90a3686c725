#pragma once

// Directed rounding without touching the FPU control word.
//
// Every operation is computed once in round-to-nearest; an error-free
// transformation (TwoSum, FMA residual) tells us on which side of the exact
// result the rounded value landed, and we step one ulp outward only when the
// result was inexact in the wrong direction. Results are therefore the
// correctly rounded-down / rounded-up values, and the code is safe to run
// concurrently from any number of threads.

#include <cmath>
#include <limits>

#include "sobolev/errors.hpp"

namespace sobolev::rnd {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kUnitRoundoff = 0x1p-53;
inline constexpr double kEta = 0x1p-1074;  // smallest subnormal
// Below this magnitude an FMA residual may itself be inexact.
inline constexpr double kUnderflowGuard = 0x1p-968;

inline double next_up(double x) { return std::nextafter(x, kInf); }
inline double next_down(double x) { return std::nextafter(x, -kInf); }

inline double checked(double x) {
  if (!std::isfinite(x)) throw OverflowError("interval endpoint overflow");
  return x;
}

inline double add_down(double a, double b) {
  const double s = checked(a + b);
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return err < 0.0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
  const double s = checked(a + b);
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return err > 0.0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
  const double p = checked(a * b);
  if (a == 0.0 || b == 0.0) return p;
  if (std::fabs(p) < kUnderflowGuard) return next_down(p);
  const double e = std::fma(a, b, -p);
  return e < 0.0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
  const double p = checked(a * b);
  if (a == 0.0 || b == 0.0) return p;
  if (std::fabs(p) < kUnderflowGuard) return next_up(p);
  const double e = std::fma(a, b, -p);
  return e > 0.0 ? next_up(p) : p;
}

// a / b for b != 0. The exact quotient is q + r/b with r = a - q*b exact.
inline double div_down(double a, double b) {
  const double q = checked(a / b);
  if (a == 0.0) return q;
  if (std::fabs(q) < kUnderflowGuard || std::fabs(a) < kUnderflowGuard) return next_down(q);
  const double r = std::fma(-q, b, a);
  const bool below = (r < 0.0) != (b < 0.0) && r != 0.0;
  return below ? next_down(q) : q;
}

inline double div_up(double a, double b) {
  const double q = checked(a / b);
  if (a == 0.0) return q;
  if (std::fabs(q) < kUnderflowGuard || std::fabs(a) < kUnderflowGuard) return next_up(q);
  const double r = std::fma(-q, b, a);
  const bool above = (r > 0.0) != (b < 0.0) && r != 0.0;
  return above ? next_up(q) : q;
}

inline double sqrt_down(double x) {
  const double s = std::sqrt(x);
  if (x == 0.0) return 0.0;
  if (x < kUnderflowGuard) return next_down(s);
  const double r = std::fma(-s, s, x);
  return r < 0.0 ? next_down(s) : s;
}

inline double sqrt_up(double x) {
  const double s = std::sqrt(x);
  if (x == 0.0) return 0.0;
  if (x < kUnderflowGuard) return next_up(s);
  const double r = std::fma(-s, s, x);
  return r > 0.0 ? next_up(s) : s;
}

}  // namespace sobolev::rnd
