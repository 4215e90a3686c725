#pragma once

// Rigorous dot products of midpoint-radius vectors.
//
// The midpoint part is accumulated with the compensated Dot2 scheme
// (TwoProduct via FMA, TwoSum for the running sum), four independent lanes
// wide. Element i of a segment always goes to lane i % 4, so the scalar and
// vector kernels perform the same operations in the same order and produce
// bit-identical accumulators. Radii are accumulated separately and the final
// enclosure adds an a-priori bound for everything that was rounded.

#include <cstddef>

#include "sobolev/interval.hpp"

namespace sobolev::simd {

inline constexpr int kLanes = 4;

struct DotAcc {
  alignas(32) double s[kLanes] = {};
  alignas(32) double c[kLanes] = {};
  alignas(32) double abs[kLanes] = {};
  alignas(32) double rad[kLanes] = {};
  std::size_t n = 0;
};

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);
/// ISA used by dot_segment. Picked on first use from the CPU features; the
/// environment variable SOBOLEV_SIMD=scalar|avx2|neon overrides the choice.
Isa active_isa();
/// Force an ISA (tests and benchmarks). Throws DomainError if unavailable.
void set_isa(Isa isa);

using SegmentFn = void (*)(DotAcc&, const double* xm, const double* xr, const double* ym,
                           const double* yr, std::size_t n);

// xr and yr may be null for point data.
void dot_segment_scalar(DotAcc& acc, const double* xm, const double* xr, const double* ym,
                        const double* yr, std::size_t n);
#if defined(__x86_64__) || defined(__i386__)
void dot_segment_avx2(DotAcc& acc, const double* xm, const double* xr, const double* ym,
                      const double* yr, std::size_t n);
#endif
#if defined(__aarch64__)
void dot_segment_neon(DotAcc& acc, const double* xm, const double* xr, const double* ym,
                      const double* yr, std::size_t n);
#endif

SegmentFn segment_fn(Isa isa);

/// Accumulate sum_i x_i * y_i into acc with the active ISA.
void dot_segment(DotAcc& acc, const double* xm, const double* xr, const double* ym,
                 const double* yr, std::size_t n);

/// Merge the lanes and return an enclosure of everything accumulated.
Interval finalize(const DotAcc& acc);

inline Interval dot(const double* xm, const double* xr, const double* ym, const double* yr,
                    std::size_t n) {
  DotAcc acc;
  dot_segment(acc, xm, xr, ym, yr, n);
  return finalize(acc);
}

}  // namespace sobolev::simd
