#pragma once

#include <cstddef>
#include <vector>

#include "sobolev/interval.hpp"
#include "sobolev/midrad.hpp"

namespace sobolev {

/// Symmetric interval matrix; only the upper triangle is stored, so
/// (i, j) and (j, i) address the same entry.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n);
  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(const std::vector<double>& d);

  std::size_t n() const { return n_; }
  Interval& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
  const Interval& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  MidRadMatrix to_midrad() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t n_;
  std::vector<Interval> data_;
};

struct SpectrumBounds {
  /// lo: lower bound of the smallest eigenvalue of every symmetric matrix in
  /// the family; hi: upper bound of the smallest eigenvalue (Rayleigh quotient).
  Interval min_eig;
  /// Lower bound of min_k |lambda_k| over the family (0 if not separated).
  double min_abs_lo = 0.0;
  /// Deviation of the approximate eigenvectors from orthonormality.
  double orthogonality_defect = 0.0;
};

/// Eigenvalue bounds for a symmetric midpoint-radius matrix: approximate
/// diagonalisation in floating point, then Gershgorin discs of the rigorously
/// transformed matrix X^T A X and Ostrowski's theorem for the non-orthogonal X.
SpectrumBounds sym_spectrum_bounds(const MidRadMatrix& a);

Interval iv_sym_eig_min(const SymMatrix& m);

}  // namespace sobolev
