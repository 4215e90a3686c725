#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

#include "sobolev/simd/dot.hpp"

namespace sobolev::simd {

namespace {

template <bool HasXr, bool HasYr>
void segment(DotAcc& a, const double* xm, const double* xr, const double* ym, const double* yr,
             std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d s = _mm256_load_pd(a.s);
  __m256d c = _mm256_load_pd(a.c);
  __m256d ab = _mm256_load_pd(a.abs);
  __m256d rd = _mm256_load_pd(a.rad);

  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(xm + i);
    const __m256d y = _mm256_loadu_pd(ym + i);
    const __m256d p = _mm256_mul_pd(x, y);
    const __m256d e = _mm256_fmsub_pd(x, y, p);
    const __m256d sn = _mm256_add_pd(s, p);
    const __m256d bb = _mm256_sub_pd(sn, s);
    const __m256d q = _mm256_add_pd(_mm256_sub_pd(s, _mm256_sub_pd(sn, bb)), _mm256_sub_pd(p, bb));
    s = sn;
    c = _mm256_add_pd(c, _mm256_add_pd(q, e));
    ab = _mm256_add_pd(ab, _mm256_andnot_pd(sign, p));
    if constexpr (HasXr && HasYr) {
      const __m256d rx = _mm256_loadu_pd(xr + i);
      const __m256d ry = _mm256_loadu_pd(yr + i);
      const __m256d t1 = _mm256_mul_pd(_mm256_andnot_pd(sign, x), ry);
      const __m256d t2 = _mm256_mul_pd(rx, _mm256_add_pd(_mm256_andnot_pd(sign, y), ry));
      rd = _mm256_add_pd(rd, _mm256_add_pd(t1, t2));
    } else if constexpr (HasXr) {
      const __m256d rx = _mm256_loadu_pd(xr + i);
      rd = _mm256_add_pd(rd, _mm256_mul_pd(rx, _mm256_andnot_pd(sign, y)));
    } else if constexpr (HasYr) {
      const __m256d ry = _mm256_loadu_pd(yr + i);
      rd = _mm256_add_pd(rd, _mm256_mul_pd(_mm256_andnot_pd(sign, x), ry));
    }
  }
  _mm256_store_pd(a.s, s);
  _mm256_store_pd(a.c, c);
  _mm256_store_pd(a.abs, ab);
  _mm256_store_pd(a.rad, rd);
  a.n += i;

  // Tail elements land in lanes 0..n%4-1, exactly as in the scalar kernel.
  if (i < n) dot_segment_scalar(a, xm + i, xr ? xr + i : nullptr, ym + i, yr ? yr + i : nullptr, n - i);
}

}  // namespace

void dot_segment_avx2(DotAcc& acc, const double* xm, const double* xr, const double* ym,
                      const double* yr, std::size_t n) {
  if (xr && yr) segment<true, true>(acc, xm, xr, ym, yr, n);
  else if (xr) segment<true, false>(acc, xm, xr, ym, yr, n);
  else if (yr) segment<false, true>(acc, xm, xr, ym, yr, n);
  else segment<false, false>(acc, xm, xr, ym, yr, n);
}

}  // namespace sobolev::simd

#endif
