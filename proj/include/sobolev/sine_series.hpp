#pragma once

#include <vector>

#include "sobolev/domain.hpp"
#include "sobolev/interval.hpp"
#include "sobolev/midrad.hpp"

namespace sobolev {

/// u(x, y) = sum_{i,j=1..N} a_ij sin(i pi x / L1) sin(j pi y / L2)
class SineSeries2D {
 public:
  SineSeries2D() = default;
  SineSeries2D(const DomainRect& domain, int n);
  /// Point coefficients in row-major order, a_11 first.
  SineSeries2D(const DomainRect& domain, int n, const std::vector<double>& coeffs);

  const DomainRect& domain() const { return domain_; }
  int N() const { return n_; }
  // 1-based mode indices
  Interval& a(int i, int j) { return coeffs_[index(i, j)]; }
  const Interval& a(int i, int j) const { return coeffs_[index(i, j)]; }
  const std::vector<Interval>& coeffs() const { return coeffs_; }
  std::vector<double> midpoints() const;

  bool is_zero() const;
  SineSeries2D scaled(const Interval& c) const;
  /// Same function represented with a different truncation (zero padded or cut).
  SineSeries2D resized(int n) const;

 private:
  std::size_t index(int i, int j) const;
  DomainRect domain_;
  int n_ = 0;
  std::vector<Interval> coeffs_;
};

enum class Basis { Sin, Cos };

/// Tensor series with a sine or cosine family in each direction. Indices run
/// 0..K; for a sine direction the index-0 coefficient is always zero.
class MixedSeries2D {
 public:
  MixedSeries2D() = default;
  MixedSeries2D(const DomainRect& domain, Basis bx, Basis by, int kx, int ky);
  static MixedSeries2D from_sine(const SineSeries2D& u);

  const DomainRect& domain() const { return domain_; }
  Basis bx() const { return bx_; }
  Basis by() const { return by_; }
  int Kx() const { return kx_; }
  int Ky() const { return ky_; }
  Interval& c(int a, int b) { return coeffs_[static_cast<std::size_t>(a) * (ky_ + 1) + b]; }
  const Interval& c(int a, int b) const { return coeffs_[static_cast<std::size_t>(a) * (ky_ + 1) + b]; }
  bool is_sine() const { return bx_ == Basis::Sin && by_ == Basis::Sin; }
  /// Conversion back to a sine series (requires sine in both directions).
  SineSeries2D to_sine() const;
  MixedSeries2D scaled(const Interval& s) const;

 private:
  DomainRect domain_;
  Basis bx_ = Basis::Sin, by_ = Basis::Sin;
  int kx_ = 0, ky_ = 0;
  std::vector<Interval> coeffs_;
};

/// Largest trigonometric order produced by products (guards memory and time).
inline constexpr int kDefaultMaxOrder = 1024;

/// Exact product of two tensor series; only rounding enters the coefficients.
MixedSeries2D multiply(const MixedSeries2D& f, const MixedSeries2D& g, int max_order = kDefaultMaxOrder);

/// u^p as an exact tensor series (sine for odd p, cosine for even p).
MixedSeries2D power_expand(const SineSeries2D& u, int p, int max_order = kDefaultMaxOrder);

Interval eval(const SineSeries2D& u, const Interval& x, const Interval& y);
Interval eval(const MixedSeries2D& f, const Interval& x, const Interval& y);

/// Values at all points of the tensor grid xs x ys (row index = x).
IMatrix eval_grid(const SineSeries2D& u, const std::vector<double>& xs, const std::vector<double>& ys);

Interval h01_norm(const SineSeries2D& u);
Interval l2_norm(const SineSeries2D& u);
/// Integral over the rectangle and squared L2 norm of a tensor series.
Interval integral(const MixedSeries2D& f);
Interval l2_norm_squared(const MixedSeries2D& f);

/// Where and how much the function may be negative; lets lp_norm handle odd
/// exponents exactly.
struct PositivityHint {
  bool valid = false;
  double neg_sup = 0.0;      // upper bound of sup max(-u, 0)
  double neg_measure = 0.0;  // upper bound of the measure of {u < 0}
};

struct QuadratureOptions {
  int cells = 512;          // per direction
  double max_width = 0.0;   // 0 disables the width check
};

Interval lp_norm(const SineSeries2D& u, double q, const PositivityHint& hint = {},
                 const QuadratureOptions& quad = {});
/// The quadrature path alone (any real q > 1).
Interval lp_norm_quadrature(const SineSeries2D& u, double q, const QuadratureOptions& quad = {});

Interval sup_abs_bound(const SineSeries2D& u);
Interval grad_sup_bound(const SineSeries2D& u);

struct InfScan {
  Interval inf;              // encloses inf over the rectangle
  double neg_measure = 0.0;  // measure of cells on which u may be negative
  int grid = 0;
  int refined_cells = 0;
};

/// Grid scan with a Lipschitz correction per cell, followed by one
/// mean-value refinement pass on every cell whose bound is not positive.
InfScan inf_scan(const SineSeries2D& u, int m = 256);
Interval inf_enclosure(const SineSeries2D& u, int m = 256);

}  // namespace sobolev
