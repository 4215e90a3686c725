#include <cmath>

#include "sobolev/simd/dot.hpp"

namespace sobolev::simd {

namespace {

template <bool HasXr, bool HasYr>
void segment(DotAcc& a, const double* xm, const double* xr, const double* ym, const double* yr,
             std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t l = i & (kLanes - 1);
    const double x = xm[i], y = ym[i];
    const double p = x * y;
    const double e = std::fma(x, y, -p);
    const double s = a.s[l] + p;
    const double bb = s - a.s[l];
    const double q = (a.s[l] - (s - bb)) + (p - bb);
    a.s[l] = s;
    a.c[l] = a.c[l] + (q + e);
    a.abs[l] = a.abs[l] + std::fabs(p);
    if constexpr (HasXr && HasYr) {
      const double t1 = std::fabs(x) * yr[i];
      const double t2 = xr[i] * (std::fabs(y) + yr[i]);
      a.rad[l] = a.rad[l] + (t1 + t2);
    } else if constexpr (HasXr) {
      a.rad[l] = a.rad[l] + xr[i] * std::fabs(y);
    } else if constexpr (HasYr) {
      a.rad[l] = a.rad[l] + std::fabs(x) * yr[i];
    }
  }
  a.n += n;
}

}  // namespace

void dot_segment_scalar(DotAcc& acc, const double* xm, const double* xr, const double* ym,
                        const double* yr, std::size_t n) {
  if (xr && yr) segment<true, true>(acc, xm, xr, ym, yr, n);
  else if (xr) segment<true, false>(acc, xm, xr, ym, yr, n);
  else if (yr) segment<false, true>(acc, xm, xr, ym, yr, n);
  else segment<false, false>(acc, xm, xr, ym, yr, n);
}

}  // namespace sobolev::simd
