#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "sobolev/simd/dot.hpp"

namespace sobolev::simd {

namespace {

using namespace rnd;

Isa detect() {
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#endif
#if defined(__aarch64__)
  return Isa::neon;
#endif
  return Isa::scalar;
}

Isa initial() {
  if (const char* env = std::getenv("SOBOLEV_SIMD")) {
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (std::strcmp(env, isa_name(isa)) == 0 && isa_available(isa)) return isa;
    }
  }
  return detect();
}

std::atomic<int>& current() {
  static std::atomic<int> isa{static_cast<int>(initial())};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return static_cast<Isa>(current().load(std::memory_order_relaxed)); }

void set_isa(Isa isa) {
  if (!isa_available(isa)) throw DomainError(std::string("ISA not available: ") + isa_name(isa));
  current().store(static_cast<int>(isa), std::memory_order_relaxed);
}

SegmentFn segment_fn(Isa isa) {
  switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::avx2: return &dot_segment_avx2;
#endif
#if defined(__aarch64__)
    case Isa::neon: return &dot_segment_neon;
#endif
    default: return &dot_segment_scalar;
  }
}

void dot_segment(DotAcc& acc, const double* xm, const double* xr, const double* ym,
                 const double* yr, std::size_t n) {
  segment_fn(active_isa())(acc, xm, xr, ym, yr, n);
}

Interval finalize(const DotAcc& acc) {
  double s = acc.s[0], c = acc.c[0], ab = acc.abs[0], rd = acc.rad[0];
  for (int l = 1; l < kLanes; ++l) {
    const double sn = s + acc.s[l];
    const double bb = sn - s;
    const double q = (s - (sn - bb)) + (acc.s[l] - bb);
    s = sn;
    c = c + q;
    c = c + acc.c[l];
    ab = ab + acc.abs[l];
    rd = rd + acc.rad[l];
  }
  const double res = s + c;
  if (!std::isfinite(res) || !std::isfinite(ab) || !std::isfinite(rd))
    throw OverflowError("dot product overflow");

  // |res - sum x_i y_i| <= u |res| + 2 (n + 10)^2 u^2 sum |x_i y_i| + underflow
  // and the exact radius sum is at most rd (1 + 1.01 (n + 4) u) + underflow.
  const double n = static_cast<double>(acc.n);
  const double u = kUnitRoundoff;
  const double g = mul_up(mul_up(n + 10.0, n + 10.0), mul_up(u, u));
  double err = mul_up(u, std::fabs(res));
  err = add_up(err, mul_up(mul_up(2.0, g), ab));
  err = add_up(err, mul_up(rd, add_up(1.0, mul_up(1.01 * (n + 4.0), u))));
  err = add_up(err, mul_up(4.0 * (n + 1.0), kEta));
  err = next_up(next_up(err));
  return Interval(sub_down(res, err), add_up(res, err));
}

}  // namespace sobolev::simd
