#include "sobolev/galerkin.hpp"

#include <cmath>

#include "sobolev/mode_integrals.hpp"

namespace sobolev {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Pseudo-spectral evaluation on the midpoint grid t_m = (m + 1/2) / M with
// M = pN + 1 points per direction. Sums over this grid integrate cos(k pi t)
// exactly for 0 <= k < 2M, which covers every integrand below.
class System {
 public:
  System(int p, int n, const DomainRect& domain, bool odd_only)
      : p_(p), n_(n), m_(p * n + 1), domain_(domain) {
    for (int i = 1; i <= n; ++i)
      if (!odd_only || i % 2 == 1) idx_.push_back(i);
    s_ = table(n, false, 1);
    const int kw = (p - 1) * n;  // order of the potential p u^{p-1}
    if (p % 2 == 1) {
      cw_ = table(kw + 1, true, 0);
    } else {
      cw_ = table(kw, false, 1);
      cp_ = table(p * n + 1, true, 0);
      tr_.resize(p * n + 1, n);
      for (int a = 0; a <= p * n; ++a)
        for (int i = 1; i <= n; ++i) tr_(a, i - 1) = modes::transfer_times_pi(a, i) / M_PI;
    }
    lambda_.resize(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        lambda_(i - 1, j - 1) = M_PI * M_PI * (double(i) * i / (domain.L1() * domain.L1()) +
                                                 double(j) * j / (domain.L2() * domain.L2()));
  }

  int size() const { return static_cast<int>(idx_.size() * idx_.size()); }

  MatrixXd unpack(const VectorXd& x) const {
    MatrixXd a = MatrixXd::Zero(n_, n_);
    const Index r = static_cast<Index>(idx_.size());
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j) a(idx_[i] - 1, idx_[j] - 1) = x(i * r + j);
    return a;
  }

  VectorXd pack(const MatrixXd& a) const {
    const Index r = static_cast<Index>(idx_.size());
    VectorXd x(r * r);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j) x(i * r + j) = a(idx_[i] - 1, idx_[j] - 1);
    return x;
  }

  VectorXd lambda_times(const VectorXd& x) const { return pack(lambda_.cwiseProduct(unpack(x))); }

  VectorXd residual(const VectorXd& x) const {
    const MatrixXd a = unpack(x);
    const MatrixXd u = s_ * a * s_.transpose();
    const MatrixXd up = u.array().pow(p_).matrix();
    const double mm = double(m_) * m_;
    MatrixXd proj;
    if (p_ % 2 == 1) {
      proj = 4.0 / mm * (s_.transpose() * up * s_);
    } else {
      MatrixXd c = cp_.transpose() * up * cp_ / mm;
      c.rightCols(c.cols() - 1) *= 2.0;
      c.bottomRows(c.rows() - 1) *= 2.0;
      proj = tr_.transpose() * c * tr_;
    }
    return pack(lambda_.cwiseProduct(a) - proj);
  }

  MatrixXd jacobian(const VectorXd& x) const {
    const MatrixXd a = unpack(x);
    const MatrixXd u = s_ * a * s_.transpose();
    const MatrixXd w_grid = double(p_) * u.array().pow(p_ - 1).matrix();
    const double mm = double(m_) * m_;
    const bool cos_type = p_ % 2 == 1;
    MatrixXd w;  // coefficients of the potential
    if (cos_type) {
      w = cw_.transpose() * w_grid * cw_ / mm;
      w.rightCols(w.cols() - 1) *= 2.0;
      w.bottomRows(w.rows() - 1) *= 2.0;
    } else {
      w = 4.0 / mm * (cw_.transpose() * w_grid * cw_);
    }
    const Index r = static_cast<Index>(idx_.size());
    const Index na = w.rows();
    // ix((i,k), a) = int cos/sin(a) sin(i) sin(k)
    MatrixXd ix(r * r, na);
    for (Index i = 0; i < r; ++i) {
      for (Index k = 0; k < r; ++k) {
        for (Index t = 0; t < na; ++t) {
          const int a_idx = cos_type ? static_cast<int>(t) : static_cast<int>(t) + 1;
          ix(i * r + k, t) = cos_type ? modes::cos_sin_sin(a_idx, idx_[i], idx_[k])
                                      : modes::sin_sin_sin_times_pi(a_idx, idx_[i], idx_[k]) / M_PI;
        }
      }
    }
    const MatrixXd z = ix * w;                    // ((i,k), b)
    const MatrixXd q = z * ix.transpose();        // ((i,k), (j,l))
    MatrixXd jac(r * r, r * r);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j)
        for (Index k = 0; k < r; ++k)
          for (Index l = 0; l < r; ++l) jac(i * r + j, k * r + l) = -4.0 * q(i * r + k, j * r + l);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j) jac(i * r + j, i * r + j) += lambda_(idx_[i] - 1, idx_[j] - 1);
    return jac;
  }

 private:
  // table(t, k) = sin(k pi t) or cos(k pi t) for k = first .. first + count - 1
  MatrixXd table(int count, bool cosine, int first) const {
    MatrixXd t(m_, count);
    for (int m = 0; m < m_; ++m) {
      const double x = (m + 0.5) / m_;
      for (int k = 0; k < count; ++k) {
        const double arg = M_PI * (first + k) * x;
        t(m, k) = cosine ? std::cos(arg) : std::sin(arg);
      }
    }
    return t;
  }

  int p_, n_, m_;
  DomainRect domain_;
  std::vector<int> idx_;
  MatrixXd s_, cw_, cp_, tr_, lambda_;
};

void check_exponent(int p) {
  if (p < 2 || p > 5) throw DomainError("solver supports exponents p = 2..5");
}

}  // namespace

SineSeries2D initial_guess(int p, const DomainRect& domain) {
  check_exponent(p);
  const double lambda11 = M_PI * M_PI * (1.0 / (domain.L1() * domain.L1()) + 1.0 / (domain.L2() * domain.L2()));
  const double ip = modes::sine_power_integral(p + 1);
  const double c = std::pow(lambda11 / (4.0 * ip * ip), 1.0 / (p - 1));
  return SineSeries2D(domain, 1, {c});
}

std::vector<double> galerkin_residual_vector(const SineSeries2D& u, int p) {
  check_exponent(p);
  const System sys(p, u.N(), u.domain(), false);
  const std::vector<double> mids = u.midpoints();
  const MatrixXd a = Eigen::Map<const Eigen::Matrix<double, -1, -1, Eigen::RowMajor>>(mids.data(), u.N(), u.N());
  const VectorXd f = sys.residual(sys.pack(a));
  return {f.data(), f.data() + f.size()};
}

double galerkin_residual(const SineSeries2D& u, int p) {
  const auto f = galerkin_residual_vector(u, p);
  return Eigen::Map<const VectorXd>(f.data(), static_cast<Index>(f.size())).norm();
}

Eigen::MatrixXd galerkin_jacobian(const SineSeries2D& u, int p) {
  check_exponent(p);
  const System sys(p, u.N(), u.domain(), false);
  const std::vector<double> mids = u.midpoints();
  const MatrixXd a = Eigen::Map<const Eigen::Matrix<double, -1, -1, Eigen::RowMajor>>(mids.data(), u.N(), u.N());
  return sys.jacobian(sys.pack(a));
}

SineSeries2D newton_solve(const SolverConfig& cfg, const SineSeries2D& guess, const NewtonObserver& observer) {
  check_exponent(cfg.p);
  if (cfg.N < 1) throw DomainError("solver needs N >= 1");
  if (!(cfg.newton_tol > 0.0)) throw DomainError("newton_tol must be positive");
  if (guess.is_zero()) throw DomainError("the zero series is a trivial solution; start elsewhere");
  const bool odd_only = cfg.symmetry.value_or(guess.domain().is_square());
  const System sys(cfg.p, cfg.N, guess.domain(), odd_only);

  const SineSeries2D start = guess.resized(cfg.N);
  const std::vector<double> mids = start.midpoints();
  VectorXd x = sys.pack(Eigen::Map<const Eigen::Matrix<double, -1, -1, Eigen::RowMajor>>(mids.data(), cfg.N, cfg.N));
  if (x.norm() == 0.0) throw DomainError("initial guess has no component in the solver's mode set");

  VectorXd f = sys.residual(x);
  double last_step = 0.0;
  for (int it = 0;; ++it) {
    NewtonRecord rec;
    rec.iteration = it;
    rec.residual = f.norm();
    const double scale = sys.lambda_times(x).norm();
    rec.relative = scale > 0.0 ? rec.residual / scale : rec.residual;
    rec.step = last_step;
    if (observer) observer(rec);
    if (!std::isfinite(rec.residual)) throw NoConvergence("Newton iteration diverged");
    if (rec.relative <= cfg.newton_tol) break;
    if (it >= cfg.max_iter) throw NoConvergence("Newton iteration did not reach the tolerance");

    const MatrixXd jac = sys.jacobian(x);
    Eigen::PartialPivLU<MatrixXd> lu(jac);
    if (!(lu.rcond() > 1e-15)) throw SingularJacobian("Galerkin Jacobian is numerically singular");
    const VectorXd d = lu.solve(f);
    if (!d.allFinite()) throw SingularJacobian("linear solve produced non-finite values");

    // halve the step until the residual norm decreases
    double step = cfg.damping;
    VectorXd xn, fn;
    for (;;) {
      xn = x - step * d;
      fn = sys.residual(xn);
      if (fn.norm() < rec.residual) break;
      step *= 0.5;
      if (step < 1e-10) throw NoConvergence("line search stalled before reaching the tolerance");
    }
    x = xn;
    f = fn;
    last_step = step;
  }
  if (x.norm() == 0.0) throw NoConvergence("iteration collapsed onto the zero solution");
  const MatrixXd a = sys.unpack(x);
  std::vector<double> coeffs(static_cast<std::size_t>(cfg.N) * cfg.N);
  for (int i = 0; i < cfg.N; ++i)
    for (int j = 0; j < cfg.N; ++j) coeffs[static_cast<std::size_t>(i) * cfg.N + j] = a(i, j);
  return SineSeries2D(guess.domain(), cfg.N, coeffs);
}

}  // namespace sobolev
