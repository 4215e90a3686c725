#include "sobolev/sine_series.hpp"

#include <algorithm>
#include <cmath>

#include "sobolev/elementary.hpp"
#include "sobolev/parallel.hpp"
#include "sobolev/simd/dot.hpp"

namespace sobolev {

using namespace rnd;

// ---------------------------------------------------------------------------
// storage

SineSeries2D::SineSeries2D(const DomainRect& domain, int n)
    : domain_(domain), n_(n), coeffs_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw DomainError("sine series needs N >= 1");
}

SineSeries2D::SineSeries2D(const DomainRect& domain, int n, const std::vector<double>& coeffs)
    : SineSeries2D(domain, n) {
  if (coeffs.size() != coeffs_.size()) throw DomainError("coefficient count does not match N*N");
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs_[k] = Interval(coeffs[k]);
}

std::size_t SineSeries2D::index(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw DomainError("sine mode index out of range");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

std::vector<double> SineSeries2D::midpoints() const {
  std::vector<double> m(coeffs_.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = coeffs_[k].mid();
  return m;
}

bool SineSeries2D::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Interval& c) { return c.lo() == 0.0 && c.hi() == 0.0; });
}

SineSeries2D SineSeries2D::scaled(const Interval& c) const {
  SineSeries2D out(domain_, n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] * c;
  return out;
}

SineSeries2D SineSeries2D::resized(int n) const {
  SineSeries2D out(domain_, n);
  const int m = std::min(n, n_);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) out.a(i, j) = a(i, j);
  return out;
}

MixedSeries2D::MixedSeries2D(const DomainRect& domain, Basis bx, Basis by, int kx, int ky)
    : domain_(domain), bx_(bx), by_(by), kx_(kx), ky_(ky),
      coeffs_(static_cast<std::size_t>(kx + 1) * (ky + 1)) {
  if (kx < 0 || ky < 0) throw DomainError("negative series order");
}

MixedSeries2D MixedSeries2D::from_sine(const SineSeries2D& u) {
  MixedSeries2D f(u.domain(), Basis::Sin, Basis::Sin, u.N(), u.N());
  for (int i = 1; i <= u.N(); ++i)
    for (int j = 1; j <= u.N(); ++j) f.c(i, j) = u.a(i, j);
  return f;
}

SineSeries2D MixedSeries2D::to_sine() const {
  if (!is_sine()) throw DomainError("series is not a double sine series");
  const int n = std::max(1, std::max(kx_, ky_));
  SineSeries2D u(domain_, n);
  for (int a = 1; a <= kx_; ++a)
    for (int b = 1; b <= ky_; ++b) u.a(a, b) = c(a, b);
  return u;
}

MixedSeries2D MixedSeries2D::scaled(const Interval& s) const {
  MixedSeries2D out = *this;
  for (auto& v : out.coeffs_) v = v * s;
  return out;
}

// ---------------------------------------------------------------------------
// products

namespace {

// Factor turning a one-sided coefficient into the symmetric two-sided form.
double extension_factor(Basis b, int k) {
  if (b == Basis::Cos) return k == 0 ? 1.0 : 0.5;
  if (k == 0) return 0.0;
  return k > 0 ? 0.5 : -0.5;
}

struct Extended {
  int kx, ky;          // index range [-kx, kx] x [-ky, ky]
  std::size_t stride;  // 2 ky + 1
  std::vector<double> mid, rad;
  bool point = true;
};

// reverse_y stores column t at position -t (for convolution traversal).
Extended extend(const MixedSeries2D& f, bool reverse_y) {
  Extended e;
  e.kx = f.Kx();
  e.ky = f.Ky();
  e.stride = static_cast<std::size_t>(2 * e.ky + 1);
  e.mid.assign(static_cast<std::size_t>(2 * e.kx + 1) * e.stride, 0.0);
  e.rad.assign(e.mid.size(), 0.0);
  for (int k = -e.kx; k <= e.kx; ++k) {
    const double fx = extension_factor(f.bx(), k);
    if (fx == 0.0) continue;
    for (int l = -e.ky; l <= e.ky; ++l) {
      const double fy = extension_factor(f.by(), l);
      if (fy == 0.0) continue;
      const Interval v = f.c(std::abs(k), std::abs(l)) * Interval(fx * fy);
      const int col = reverse_y ? -l : l;
      const std::size_t pos = static_cast<std::size_t>(k + e.kx) * e.stride + (col + e.ky);
      to_midrad(v, e.mid[pos], e.rad[pos]);
      if (e.rad[pos] != 0.0) e.point = false;
    }
  }
  return e;
}

}  // namespace

MixedSeries2D multiply(const MixedSeries2D& f, const MixedSeries2D& g, int max_order) {
  if (!(f.domain() == g.domain())) throw DomainError("product of series on different domains");
  const int kx = f.Kx() + g.Kx(), ky = f.Ky() + g.Ky();
  if (kx > max_order || ky > max_order) throw CapacityError("series product exceeds the configured maximum order");

  const Basis bx = f.bx() == g.bx() ? Basis::Cos : Basis::Sin;
  const Basis by = f.by() == g.by() ? Basis::Cos : Basis::Sin;
  double sign = 1.0;
  if (f.bx() == Basis::Sin && g.bx() == Basis::Sin) sign = -sign;
  if (f.by() == Basis::Sin && g.by() == Basis::Sin) sign = -sign;

  const Extended e = extend(f, false);
  const Extended r = extend(g, true);
  MixedSeries2D out(f.domain(), bx, by, kx, ky);

  parallel_for(static_cast<std::size_t>(kx + 1), [&](std::size_t mi) {
    const int m = static_cast<int>(mi);
    if (bx == Basis::Sin && m == 0) return;
    const double sx = (m == 0) ? 1.0 : 2.0;
    for (int n = 0; n <= ky; ++n) {
      if (by == Basis::Sin && n == 0) continue;
      const double sy = (n == 0) ? 1.0 : 2.0;
      simd::DotAcc acc;
      const int k_lo = std::max(-e.kx, m - r.kx), k_hi = std::min(e.kx, m + r.kx);
      const int l_lo = std::max(-e.ky, n - r.ky), l_hi = std::min(e.ky, n + r.ky);
      if (l_lo > l_hi) continue;
      const std::size_t len = static_cast<std::size_t>(l_hi - l_lo + 1);
      for (int k = k_lo; k <= k_hi; ++k) {
        // E[k, l] * G[m - k, n - l]; the reversed copy holds G[., n - l] at l - n
        const std::size_t pe = static_cast<std::size_t>(k + e.kx) * e.stride + (l_lo + e.ky);
        const std::size_t pg = static_cast<std::size_t>(m - k + r.kx) * r.stride + (l_lo - n + r.ky);
        simd::dot_segment(acc, e.mid.data() + pe, e.point ? nullptr : e.rad.data() + pe,
                          r.mid.data() + pg, r.point ? nullptr : r.rad.data() + pg, len);
      }
      out.c(m, n) = simd::finalize(acc) * Interval(sign * sx * sy);
    }
  });
  return out;
}

MixedSeries2D power_expand(const SineSeries2D& u, int p, int max_order) {
  if (p < 1 || p > 5) throw DomainError("power_expand supports exponents 1..5");
  if (static_cast<long long>(p) * u.N() > max_order)
    throw CapacityError("power expansion exceeds the configured maximum order");
  const MixedSeries2D base = MixedSeries2D::from_sine(u);
  MixedSeries2D out = base;
  for (int k = 2; k <= p; ++k) out = multiply(out, base, max_order);
  return out;
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

Interval basis_value(Basis b, int k, const Interval& x, double len) {
  const Interval arg = Interval(static_cast<double>(k)) * iv_pi() * x / Interval(len);
  return b == Basis::Sin ? sin(arg) : cos(arg);
}

Interval basis_derivative(Basis b, int k, const Interval& x, double len) {
  const Interval w = Interval(static_cast<double>(k)) * iv_pi() / Interval(len);
  const Interval arg = w * x;
  return b == Basis::Sin ? w * cos(arg) : -(w * sin(arg));
}

void check_inside(const DomainRect& d, const Interval& x, const Interval& y) {
  if (x.lo() < 0.0 || x.hi() > d.L1() || y.lo() < 0.0 || y.hi() > d.L2())
    throw DomainError("evaluation point outside the rectangle");
}

// sum_a vx[a] sum_b c(a, b) vy[b]
Interval contract(const MixedSeries2D& f, const std::vector<Interval>& vx,
                  const std::vector<Interval>& vy) {
  const std::size_t ny = vy.size();
  std::vector<double> ym(ny), yr(ny), cm(ny), cr(ny);
  for (std::size_t b = 0; b < ny; ++b) to_midrad(vy[b], ym[b], yr[b]);
  std::vector<double> vm(vx.size()), vr(vx.size()), xm(vx.size()), xr(vx.size());
  for (std::size_t a = 0; a < vx.size(); ++a) {
    for (std::size_t b = 0; b < ny; ++b) to_midrad(f.c(static_cast<int>(a), static_cast<int>(b)), cm[b], cr[b]);
    to_midrad(simd::dot(cm.data(), cr.data(), ym.data(), yr.data(), ny), vm[a], vr[a]);
    to_midrad(vx[a], xm[a], xr[a]);
  }
  return simd::dot(xm.data(), xr.data(), vm.data(), vr.data(), vx.size());
}

std::vector<Interval> basis_values(Basis b, int k_max, const Interval& x, double len, bool derivative) {
  std::vector<Interval> v(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    if (b == Basis::Sin && k == 0) continue;
    v[k] = derivative ? basis_derivative(b, k, x, len) : basis_value(b, k, x, len);
  }
  return v;
}

}  // namespace

Interval eval(const MixedSeries2D& f, const Interval& x, const Interval& y) {
  check_inside(f.domain(), x, y);
  return contract(f, basis_values(f.bx(), f.Kx(), x, f.domain().L1(), false),
                  basis_values(f.by(), f.Ky(), y, f.domain().L2(), false));
}

Interval eval(const SineSeries2D& u, const Interval& x, const Interval& y) {
  return eval(MixedSeries2D::from_sine(u), x, y);
}

namespace {

// Gradient of a sine series over a box.
std::pair<Interval, Interval> eval_gradient(const MixedSeries2D& f, const Interval& x, const Interval& y) {
  const double l1 = f.domain().L1(), l2 = f.domain().L2();
  const auto sx = basis_values(f.bx(), f.Kx(), x, l1, false);
  const auto dx = basis_values(f.bx(), f.Kx(), x, l1, true);
  const auto sy = basis_values(f.by(), f.Ky(), y, l2, false);
  const auto dy = basis_values(f.by(), f.Ky(), y, l2, true);
  return {contract(f, dx, sy), contract(f, sx, dy)};
}

MidRadMatrix sine_table(int n, const std::vector<double>& pts, double len) {
  MidRadMatrix t(pts.size(), static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (int i = 1; i <= n; ++i) t.set(p, i - 1, basis_value(Basis::Sin, i, Interval(pts[p]), len));
  return t;
}

}  // namespace

IMatrix eval_grid(const SineSeries2D& u, const std::vector<double>& xs, const std::vector<double>& ys) {
  const int n = u.N();
  const DomainRect& d = u.domain();
  for (double x : xs)
    if (x < 0.0 || x > d.L1()) throw DomainError("grid point outside the rectangle");
  for (double y : ys)
    if (y < 0.0 || y > d.L2()) throw DomainError("grid point outside the rectangle");
  MidRadMatrix a(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.set(i - 1, j - 1, u.a(i, j));
  const MidRadMatrix sx = sine_table(n, xs, d.L1());
  const MidRadMatrix sy = sine_table(n, ys, d.L2());
  const IMatrix v = multiply_abt(a, sy);  // v(i, y) = sum_j a_ij sin_j(y)
  return multiply_abt(sx, MidRadMatrix(v).transposed());
}

// ---------------------------------------------------------------------------
// norms

namespace {

// sum_k c_k^2 w_k with c and w intervals
Interval weighted_square_sum(const std::vector<Interval>& c, const std::vector<Interval>& w) {
  const std::size_t n = c.size();
  // the dot product carries an underflow allowance; keep exact zeros exact
  if (std::all_of(c.begin(), c.end(), [](const Interval& x) { return x.lo() == 0.0 && x.hi() == 0.0; }))
    return Interval(0.0);
  std::vector<double> cm(n), cr(n), tm(n), tr(n);
  for (std::size_t k = 0; k < n; ++k) {
    to_midrad(c[k], cm[k], cr[k]);
    to_midrad(c[k] * w[k], tm[k], tr[k]);
  }
  const Interval s = simd::dot(cm.data(), cr.data(), tm.data(), tr.data(), n);
  return Interval(std::max(0.0, s.lo()), std::max(0.0, s.hi()));
}

Interval nonneg_root(const Interval& x, int q) {
  if (x.hi() <= 0.0) return Interval(0.0);
  const Interval e = rational(1, q);
  const double hi = pow(Interval(x.hi()), e).hi();
  const double lo = x.lo() > 0.0 ? pow(Interval(x.lo()), e).lo() : 0.0;
  return Interval(lo, hi);
}

Interval nonneg_root_real(const Interval& x, double q) {
  if (x.hi() <= 0.0) return Interval(0.0);
  const Interval e = Interval(1.0) / Interval(q);
  const double hi = pow(Interval(x.hi()), e).hi();
  const double lo = x.lo() > 0.0 ? pow(Interval(x.lo()), e).lo() : 0.0;
  return Interval(lo, hi);
}

}  // namespace

Interval h01_norm(const SineSeries2D& u) {
  const int n = u.N();
  std::vector<Interval> w(u.coeffs().size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) w[static_cast<std::size_t>(i - 1) * n + (j - 1)] = u.domain().freq2(i, j);
  const Interval s = weighted_square_sum(u.coeffs(), w) * u.domain().mode_weight();
  return iv_pi() * sqrt(s);
}

Interval l2_norm(const SineSeries2D& u) {
  const std::vector<Interval> w(u.coeffs().size(), Interval(1.0));
  return sqrt(weighted_square_sum(u.coeffs(), w) * u.domain().mode_weight());
}

Interval integral(const MixedSeries2D& f) {
  auto weights = [](Basis b, int k_max) {
    std::vector<Interval> w(static_cast<std::size_t>(k_max) + 1, Interval(0.0));
    for (int k = 0; k <= k_max; ++k) {
      if (b == Basis::Cos) w[k] = Interval(k == 0 ? 1.0 : 0.0);
      else if (k % 2 == 1) w[k] = Interval(2.0) / (Interval(static_cast<double>(k)) * iv_pi());
    }
    return w;
  };
  return contract(f, weights(f.bx(), f.Kx()), weights(f.by(), f.Ky())) * f.domain().measure();
}

Interval l2_norm_squared(const MixedSeries2D& f) {
  std::vector<Interval> c, w;
  c.reserve(static_cast<std::size_t>(f.Kx() + 1) * (f.Ky() + 1));
  w.reserve(c.capacity());
  auto weight = [](Basis b, int k) { return (b == Basis::Cos && k == 0) ? 1.0 : 0.5; };
  for (int a = 0; a <= f.Kx(); ++a) {
    for (int b = 0; b <= f.Ky(); ++b) {
      c.push_back(f.c(a, b));
      w.push_back(Interval(weight(f.bx(), a) * weight(f.by(), b)));
    }
  }
  return weighted_square_sum(c, w) * f.domain().measure();
}

// ---------------------------------------------------------------------------
// bounds

namespace {

struct CoeffSums {
  double abs = 0, gx = 0, gy = 0, grad = 0, hxx = 0, hyy = 0, hxy = 0;
};

// Upper bounds of sum |a|, sum |a| w_x, sum |a| |grad|, ... with
// w_x = i pi / L1 and w_y = j pi / L2.
CoeffSums coefficient_sums(const SineSeries2D& u) {
  CoeffSums s;
  const Interval pi = iv_pi();
  for (int i = 1; i <= u.N(); ++i) {
    const Interval wx = Interval(static_cast<double>(i)) * pi / Interval(u.domain().L1());
    for (int j = 1; j <= u.N(); ++j) {
      const double m = u.a(i, j).mag();
      if (m == 0.0) continue;
      const Interval wy = Interval(static_cast<double>(j)) * pi / Interval(u.domain().L2());
      const Interval am(m);
      s.abs = add_up(s.abs, m);
      s.gx = add_up(s.gx, (am * wx).hi());
      s.gy = add_up(s.gy, (am * wy).hi());
      s.grad = add_up(s.grad, (am * sqrt(sqr(wx) + sqr(wy))).hi());
      s.hxx = add_up(s.hxx, (am * sqr(wx)).hi());
      s.hyy = add_up(s.hyy, (am * sqr(wy)).hi());
      s.hxy = add_up(s.hxy, (am * wx * wy).hi());
    }
  }
  return s;
}

}  // namespace

Interval sup_abs_bound(const SineSeries2D& u) {
  const double hi = coefficient_sums(u).abs;
  const Interval centre = eval(u, Interval(0.5 * u.domain().L1()), Interval(0.5 * u.domain().L2()));
  return Interval(std::min(centre.mig(), hi), hi);
}

Interval grad_sup_bound(const SineSeries2D& u) { return Interval(0.0, coefficient_sums(u).grad); }

// ---------------------------------------------------------------------------
// L^q norms

Interval lp_norm_quadrature(const SineSeries2D& u, double q, const QuadratureOptions& quad) {
  if (!(q > 1.0)) throw DomainError("L^q norm needs q > 1");
  if (quad.cells < 1) throw DomainError("quadrature needs at least one cell");
  if (u.is_zero()) return Interval(0.0);
  const DomainRect& d = u.domain();
  const int n = quad.cells;
  const double hx = d.L1() / n, hy = d.L2() / n;
  std::vector<double> xs(n), ys(n);
  for (int k = 0; k < n; ++k) {
    xs[k] = (k + 0.5) * hx;
    ys[k] = (k + 0.5) * hy;
  }
  const IMatrix vals = eval_grid(u, xs, ys);
  const Interval qi(q);
  Interval sum(0.0);
  for (std::size_t k = 0; k < vals.data().size(); ++k) {
    const Interval a = abs(vals.data()[k]);
    if (a.hi() == 0.0) continue;
    const double hi = pow(Interval(a.hi()), qi).hi();
    const double lo = a.lo() > 0.0 ? pow(Interval(a.lo()), qi).lo() : 0.0;
    sum = sum + Interval(lo, hi);
  }
  // the cell sizes used in the remainder are upper bounds of the true ones
  const Interval cell = Interval(d.L1()) / Interval(static_cast<double>(n)) *
                        (Interval(d.L2()) / Interval(static_cast<double>(n)));
  const Interval approx = sum * cell;

  const CoeffSums cs = coefficient_sums(u);
  const Interval s(cs.abs), gx(cs.gx), gy(cs.gy);
  const Interval hxi = Interval(d.L1()) / Interval(static_cast<double>(n));
  const Interval hyi = Interval(d.L2()) / Interval(static_cast<double>(n));
  Interval err;
  if (q >= 2.0) {
    // |F_xx| <= q(q-1) S^{q-2} g_x^2 + q S^{q-1} h_xx and similarly for the
    // other second derivatives of F = |u|^q.
    const Interval s2 = pow(s, qi - Interval(2.0));
    const Interval s1 = pow(s, qi - Interval(1.0));
    const Interval c2 = qi * (qi - Interval(1.0)) * s2;
    const Interval fxx = c2 * sqr(gx) + qi * s1 * Interval(cs.hxx);
    const Interval fyy = c2 * sqr(gy) + qi * s1 * Interval(cs.hyy);
    const Interval fxy = c2 * gx * gy + qi * s1 * Interval(cs.hxy);
    err = d.measure() * ((fxx * sqr(hxi) + fyy * sqr(hyi)) / Interval(24.0) + fxy * hxi * hyi / Interval(16.0));
  } else {
    const Interval s1 = pow(s, qi - Interval(1.0));
    const Interval fx = qi * s1 * gx, fy = qi * s1 * gy;
    err = d.measure() * (fx * hxi + fy * hyi) / Interval(4.0);
  }
  const Interval integral_q = widen(approx, err.hi());
  const Interval clipped(std::max(0.0, integral_q.lo()), integral_q.hi());
  const Interval out = nonneg_root_real(clipped, q);
  if (quad.max_width > 0.0 && out.width() > quad.max_width)
    throw QuadratureError("quadrature width exceeds the requested tolerance at this cell budget");
  return out;
}

Interval lp_norm(const SineSeries2D& u, double q, const PositivityHint& hint, const QuadratureOptions& quad) {
  if (!(q > 1.0)) throw DomainError("L^q norm needs q > 1");
  if (u.is_zero()) return Interval(0.0);
  const bool integer = q == std::floor(q) && q <= 10.0;
  if (integer) {
    const int qi = static_cast<int>(q);
    if (qi == 2) return l2_norm(u);
    if (qi % 2 == 0) {
      const Interval s = l2_norm_squared(power_expand(u, qi / 2));
      return nonneg_root(s, qi);
    }
    if (hint.valid && qi <= 5) {
      const Interval base = integral(power_expand(u, qi));
      const double extra = (Interval(2.0 * hint.neg_measure) * pow_int(Interval(hint.neg_sup), qi)).hi();
      const Interval total(std::max(0.0, base.lo()), add_up(std::max(0.0, base.hi()), extra));
      return nonneg_root(total, qi);
    }
  }
  return lp_norm_quadrature(u, q, quad);
}

// ---------------------------------------------------------------------------
// infimum

InfScan inf_scan(const SineSeries2D& u, int m) {
  if (m < 2) throw DomainError("inf_enclosure needs a grid of at least 2 x 2");
  const DomainRect& d = u.domain();
  const double hx = d.L1() / m, hy = d.L2() / m;
  std::vector<double> xs(m), ys(m);
  for (int k = 0; k < m; ++k) {
    xs[k] = (k + 0.5) * hx;
    ys[k] = (k + 0.5) * hy;
  }
  const IMatrix vals = eval_grid(u, xs, ys);
  const double g = grad_sup_bound(u).hi();
  // half diagonal of a cell, padded for the rounding of the cell centres
  const double slack = 1e-14 * std::max(d.L1(), d.L2());
  const double hd = add_up(mul_up(0.5, sqrt_up(add_up(mul_up(hx, hx), mul_up(hy, hy)))), slack);
  const double hxu = add_up(mul_up(0.5, hx), slack), hyu = add_up(mul_up(0.5, hy), slack);

  InfScan out;
  out.grid = m;
  double lo = rnd::kInf, hi = 0.0;  // the boundary value 0 is attained in the closure
  int negative_cells = 0;
  const MixedSeries2D f = MixedSeries2D::from_sine(u);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const Interval v = vals(a, b);
      hi = std::min(hi, v.hi());
      double cell_lo = sub_down(v.lo(), mul_up(g, hd));
      if (cell_lo <= 0.0) {
        // local Lipschitz constant from an enclosure of the gradient on the cell
        const Interval cx(std::max(0.0, sub_down(xs[a], hxu)), std::min(d.L1(), add_up(xs[a], hxu)));
        const Interval cy(std::max(0.0, sub_down(ys[b], hyu)), std::min(d.L2(), add_up(ys[b], hyu)));
        const auto [gx, gy] = eval_gradient(f, cx, cy);
        const double gl = sqrt_up(add_up(mul_up(gx.mag(), gx.mag()), mul_up(gy.mag(), gy.mag())));
        cell_lo = std::max(cell_lo, sub_down(v.lo(), mul_up(gl, hd)));
        ++out.refined_cells;
      }
      if (cell_lo < 0.0) ++negative_cells;
      lo = std::min(lo, cell_lo);
    }
  }
  lo = std::min(lo, hi);
  out.inf = Interval(lo, hi);
  out.neg_measure = mul_up(static_cast<double>(negative_cells), mul_up(add_up(hx, slack), add_up(hy, slack)));
  return out;
}

Interval inf_enclosure(const SineSeries2D& u, int m) { return inf_scan(u, m).inf; }

}  // namespace sobolev
