#include "sobolev/mode_integrals.hpp"

#include <cmath>
#include <cstdlib>

#include "sobolev/elementary.hpp"

namespace sobolev::modes {

namespace {

// int_0^1 cos(a pi t) cos(m pi t) dt for a, m >= 0
double cos_cos(int a, int m) {
  if (a != m) return 0.0;
  return a == 0 ? 1.0 : 0.5;
}

// pi * int_0^1 sin(m pi t) dt
double sigma(int m) {
  if (m % 2 == 0) return 0.0;
  return 2.0 / m;
}

// sigma as an exact-rational enclosure
Interval sigma_iv(int m) {
  if (m % 2 == 0) return Interval(0.0);
  return rational(2, m);
}

}  // namespace

double cos_sin_sin(int a, int i, int k) {
  return 0.5 * (cos_cos(a, std::abs(i - k)) - cos_cos(a, i + k));
}

double sin_sin_sin_times_pi(int a, int i, int k) {
  return 0.25 * (sigma(a + i - k) + sigma(a - i + k) + sigma(-a + i + k) - sigma(a + i + k));
}

Interval sin_sin_sin(int a, int i, int k) {
  const Interval s = sigma_iv(a + i - k) + sigma_iv(a - i + k) + sigma_iv(-a + i + k) - sigma_iv(a + i + k);
  if (s.lo() == 0.0 && s.hi() == 0.0) return Interval(0.0);
  return s * Interval(0.25) / iv_pi();
}

double transfer_times_pi(int a, int i) {
  if ((a + i) % 2 == 0) return 0.0;
  return 4.0 * i / (static_cast<double>(i) * i - static_cast<double>(a) * a);
}

Interval transfer(int a, int i) {
  if ((a + i) % 2 == 0) return Interval(0.0);
  const long long den = static_cast<long long>(i) * i - static_cast<long long>(a) * a;
  return rational(4LL * i, den) / iv_pi();
}

double sine_power_integral(int n) {
  // I_n = (n-1)/n I_{n-2}, I_0 = 1, I_1 = 2/pi
  double v = (n % 2 == 0) ? 1.0 : 2.0 / M_PI;
  for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) v *= static_cast<double>(k - 1) / k;
  return v;
}

}  // namespace sobolev::modes
