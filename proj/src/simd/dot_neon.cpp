#if defined(__aarch64__)

#include <arm_neon.h>

#include "sobolev/simd/dot.hpp"

namespace sobolev::simd {

namespace {

// Two float64x2 registers cover the four lanes: lo holds lanes 0-1, hi 2-3.
struct Quad {
  float64x2_t lo, hi;
};

inline Quad load(const double* p) { return {vld1q_f64(p), vld1q_f64(p + 2)}; }
inline void store(double* p, Quad q) {
  vst1q_f64(p, q.lo);
  vst1q_f64(p + 2, q.hi);
}

inline void step(float64x2_t x, float64x2_t y, float64x2_t& s, float64x2_t& c, float64x2_t& ab) {
  const float64x2_t p = vmulq_f64(x, y);
  const float64x2_t e = vfmaq_f64(vnegq_f64(p), x, y);
  const float64x2_t sn = vaddq_f64(s, p);
  const float64x2_t bb = vsubq_f64(sn, s);
  const float64x2_t q = vaddq_f64(vsubq_f64(s, vsubq_f64(sn, bb)), vsubq_f64(p, bb));
  s = sn;
  c = vaddq_f64(c, vaddq_f64(q, e));
  ab = vaddq_f64(ab, vabsq_f64(p));
}

template <bool HasXr, bool HasYr>
inline float64x2_t radius(float64x2_t x, float64x2_t y, const double* xr, const double* yr) {
  if constexpr (HasXr && HasYr) {
    const float64x2_t rx = vld1q_f64(xr), ry = vld1q_f64(yr);
    return vaddq_f64(vmulq_f64(vabsq_f64(x), ry), vmulq_f64(rx, vaddq_f64(vabsq_f64(y), ry)));
  } else if constexpr (HasXr) {
    return vmulq_f64(vld1q_f64(xr), vabsq_f64(y));
  } else {
    return vmulq_f64(vabsq_f64(x), vld1q_f64(yr));
  }
}

template <bool HasXr, bool HasYr>
void segment(DotAcc& a, const double* xm, const double* xr, const double* ym, const double* yr,
             std::size_t n) {
  Quad s = load(a.s), c = load(a.c), ab = load(a.abs), rd = load(a.rad);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t x0 = vld1q_f64(xm + i), x1 = vld1q_f64(xm + i + 2);
    const float64x2_t y0 = vld1q_f64(ym + i), y1 = vld1q_f64(ym + i + 2);
    step(x0, y0, s.lo, c.lo, ab.lo);
    step(x1, y1, s.hi, c.hi, ab.hi);
    if constexpr (HasXr || HasYr) {
      rd.lo = vaddq_f64(rd.lo, radius<HasXr, HasYr>(x0, y0, xr + i, yr + i));
      rd.hi = vaddq_f64(rd.hi, radius<HasXr, HasYr>(x1, y1, xr + i + 2, yr + i + 2));
    }
  }
  store(a.s, s);
  store(a.c, c);
  store(a.abs, ab);
  store(a.rad, rd);
  a.n += i;
  if (i < n) dot_segment_scalar(a, xm + i, xr ? xr + i : nullptr, ym + i, yr ? yr + i : nullptr, n - i);
}

}  // namespace

void dot_segment_neon(DotAcc& acc, const double* xm, const double* xr, const double* ym,
                      const double* yr, std::size_t n) {
  if (xr && yr) segment<true, true>(acc, xm, xr, ym, yr, n);
  else if (xr) segment<true, false>(acc, xm, xr, ym, yr, n);
  else if (yr) segment<false, true>(acc, xm, xr, ym, yr, n);
  else segment<false, false>(acc, xm, xr, ym, yr, n);
}

}  // namespace sobolev::simd

#endif
