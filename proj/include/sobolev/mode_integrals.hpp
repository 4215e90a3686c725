#pragma once

// Exact one-dimensional integrals over [0, 1] of products of sin(k pi t) and
// cos(k pi t), used to assemble Galerkin matrices without quadrature.

#include "sobolev/interval.hpp"

namespace sobolev::modes {

/// int_0^1 cos(a pi t) sin(i pi t) sin(k pi t) dt, an exact dyadic value.
double cos_sin_sin(int a, int i, int k);

/// int_0^1 sin(a pi t) sin(i pi t) sin(k pi t) dt = (1/pi) * rational.
/// Returns the rational factor; multiply by 1/pi for the integral.
double sin_sin_sin_times_pi(int a, int i, int k);
Interval sin_sin_sin(int a, int i, int k);

/// 2 int_0^1 cos(a pi t) sin(i pi t) dt = 4 i / (pi (i^2 - a^2)) for a + i odd.
double transfer_times_pi(int a, int i);
Interval transfer(int a, int i);

/// int_0^1 sin^n(pi t) dt for n >= 1.
double sine_power_integral(int n);

}  // namespace sobolev::modes
