#include "sobolev/sym_eig.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <limits>

namespace sobolev {

using namespace rnd;

SymMatrix::SymMatrix(std::size_t n) : n_(n), data_(n * (n + 1) / 2) {
  if (n == 0) throw DomainError("empty symmetric matrix");
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Interval(1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
  SymMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Interval(d[i]);
  return m;
}

std::size_t SymMatrix::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= n_) throw DomainError("symmetric matrix index out of range");
  // row i of the upper triangle starts after i rows of decreasing length
  return i * n_ - i * (i - 1) / 2 + (j - i);
}

MidRadMatrix SymMatrix::to_midrad() const {
  MidRadMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.set(i, j, (*this)(i, j));
  return m;
}

SpectrumBounds sym_spectrum_bounds(const MidRadMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0 || a.cols() != n) throw DomainError("eigenvalue bounds need a square matrix");

  Eigen::MatrixXd mid(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mid(i, j) = 0.5 * (a.mid(i, j) + a.mid(j, i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mid);
  if (solver.info() != Eigen::Success) throw NotInvertible("floating eigensolver failed");
  const Eigen::MatrixXd& x = solver.eigenvectors();

  // rows of xt are the approximate eigenvectors, in ascending eigenvalue order
  std::vector<double> xt(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) xt[k * n + i] = x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
  const MidRadMatrix xtm = MidRadMatrix::point(n, n, std::move(xt));

  const IMatrix ax = multiply_abt(a, xtm);                    // (A X)(i, k)
  const MidRadMatrix axt = MidRadMatrix(ax).transposed();     // rows: A x_k
  const IMatrix y = multiply_abt(xtm, axt);                   // X^T A X
  const IMatrix g = multiply_abt(xtm, xtm);                   // X^T X

  double alpha = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const Interval e = (i == j) ? g(i, j) - Interval(1.0) : g(i, j);
      row = add_up(row, e.mag());
    }
    alpha = std::max(alpha, row);
  }
  if (!(alpha < 1.0)) throw NotInvertible("approximate eigenvectors far from orthonormal");

  double lower = std::numeric_limits<double>::infinity();
  double abs_lower = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    double r = 0.0;
    for (std::size_t l = 0; l < n; ++l)
      if (l != k) r = add_up(r, y(k, l).mag());
    lower = std::min(lower, sub_down(y(k, k).lo(), r));
    abs_lower = std::min(abs_lower, sub_down(y(k, k).mig(), r));
  }
  abs_lower = std::max(abs_lower, 0.0);

  // Ostrowski: lambda_k(X^T A X) = theta_k lambda_k(A), theta_k in [1-a, 1+a]
  const double lo = lower >= 0.0 ? div_down(lower, add_up(1.0, alpha))
                                 : div_down(lower, sub_down(1.0, alpha));
  const double abs_lo = div_down(abs_lower, add_up(1.0, alpha));

  const double rq = y(0, 0).hi();
  const Interval g00 = g(0, 0);
  double hi = rq >= 0.0 ? div_up(rq, g00.lo()) : div_up(rq, g00.hi());
  hi = std::max(hi, lo);

  SpectrumBounds out;
  out.min_eig = Interval(lo, hi);
  out.min_abs_lo = abs_lo;
  out.orthogonality_defect = alpha;
  return out;
}

Interval iv_sym_eig_min(const SymMatrix& m) { return sym_spectrum_bounds(m.to_midrad()).min_eig; }

}  // namespace sobolev
