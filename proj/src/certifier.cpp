#include "sobolev/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "sobolev/embedding_bounds.hpp"
#include "sobolev/midrad.hpp"
#include "sobolev/mode_integrals.hpp"
#include "sobolev/sym_eig.hpp"

namespace sobolev {

using namespace rnd;

namespace {

void check_p(int p) {
  if (p < 2 || p > 5) throw DomainError("certifier supports exponents p = 2..5");
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;  // exact for the small n used here
  return r;
}

// Upper bound of sup |u| from the coefficients.
double sup_u(const SineSeries2D& u) { return sup_abs_bound(u).hi(); }

double sum_abs(const MixedSeries2D& f) {
  double s = 0.0;
  for (int a = 0; a <= f.Kx(); ++a)
    for (int b = 0; b <= f.Ky(); ++b) s = add_up(s, f.c(a, b).mag());
  return s;
}

// 1 if every nonzero coefficient has an odd index in that direction, 0 if all
// are even, -1 otherwise.
int index_parity(const SineSeries2D& u, bool x_dir) {
  int par = -1;
  for (int i = 1; i <= u.N(); ++i) {
    for (int j = 1; j <= u.N(); ++j) {
      const Interval& v = u.a(i, j);
      if (v.lo() == 0.0 && v.hi() == 0.0) continue;
      const int k = (x_dir ? i : j) % 2;
      if (par < 0) par = k;
      else if (par != k) return -1;
    }
  }
  return par;
}

// W = f'(u) = p u^{p-1} as an exact tensor series. When u only uses modes of
// one index parity per direction, coefficients of the other parity in W are
// exactly zero; the product only encloses them, so they are cleared here.
MixedSeries2D potential(const SineSeries2D& u, int p) {
  MixedSeries2D w = power_expand(u, p - 1).scaled(Interval(static_cast<double>(p)));
  const int px = index_parity(u, true), py = index_parity(u, false);
  const int wx = px < 0 ? -1 : ((p - 1) * px) % 2;
  const int wy = py < 0 ? -1 : ((p - 1) * py) % 2;
  for (int a = 0; a <= w.Kx(); ++a)
    for (int b = 0; b <= w.Ky(); ++b)
      if ((wx >= 0 && a % 2 != wx) || (wy >= 0 && b % 2 != wy)) w.c(a, b) = Interval(0.0);
  return w;
}

// Classical embedding constant, as a point interval at its upper bound.
Interval embed_const(int q, const DomainRect& d) {
  if (q == 2) return Interval(1.0) / sqrt(Interval(first_eigenvalue_lower(d).lo()));
  return Interval(classical_constant_upper(static_cast<double>(q), d));
}

}  // namespace

Interval first_eigenvalue_lower(const DomainRect& domain) { return domain.lambda(1, 1); }

// ---------------------------------------------------------------------------
// defect

DefectBounds defect_bounds(const SineSeries2D& u, int p, int box) {
  check_p(p);
  const DomainRect& d = u.domain();
  const Interval w = d.mode_weight();
  if (u.is_zero()) return {Interval(0.0), Interval(0.0)};
  const MixedSeries2D up = power_expand(u, p);
  const int n = u.N();
  Interval h(0.0), l(0.0);
  if (up.is_sine()) {
    // u^p is itself a finite sine series: the residual is exact
    const int k = std::max(up.Kx(), up.Ky());
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        const Interval lam = d.lambda(i, j);
        const Interval ai = (i <= n && j <= n) ? u.a(i, j) : Interval(0.0);
        const Interval ci = (i <= up.Kx() && j <= up.Ky()) ? up.c(i, j) : Interval(0.0);
        const Interval r = lam * ai - ci;
        const Interval r2 = sqr(r);
        h += r2 / lam;
        l += r2;
      }
    }
    h = sqrt(w * h);
    l = sqrt(w * l);
    return {h, l};
  }

  // cosine series of u^p: sine coefficients s = T^t c T inside the box
  const int m = box > 0 ? box : 2 * p * n;
  const int kx = up.Kx(), ky = up.Ky();
  auto transfer_table = [m](int kmax) {
    MidRadMatrix t(static_cast<std::size_t>(m), static_cast<std::size_t>(kmax) + 1);  // (k, a)
    for (int k = 1; k <= m; ++k)
      for (int a = 0; a <= kmax; ++a) t.set(k - 1, a, modes::transfer(a, k));
    return t;
  };
  const MidRadMatrix tx = transfer_table(kx);
  const MidRadMatrix ty = transfer_table(ky);
  MidRadMatrix c(static_cast<std::size_t>(kx) + 1, static_cast<std::size_t>(ky) + 1);
  for (int a = 0; a <= kx; ++a)
    for (int b = 0; b <= ky; ++b) c.set(a, b, up.c(a, b));
  const IMatrix z = multiply_abt(c, ty);                            // (a, l)
  const IMatrix s = multiply_abt(tx, MidRadMatrix(z).transposed());  // (k, l)
  Interval box_sq(0.0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const Interval lam = d.lambda(i, j);
      const Interval sij = s(i - 1, j - 1);
      const Interval ai = (i <= n && j <= n) ? u.a(i, j) : Interval(0.0);
      const Interval r2 = sqr(lam * ai - sij);
      h += r2 / lam;
      l += r2;
      box_sq += sqr(sij);
    }
  }
  // everything of u^p outside the box, by Parseval
  const Interval rest = l2_norm_squared(up) - w * box_sq;
  const double tail = std::max(0.0, rest.hi());
  const Interval lam_out = d.lambda_outside(m);
  const Interval hh = w * h + Interval(div_up(tail, lam_out.lo()));
  const Interval ll = w * l + Interval(tail);
  return {sqrt(Interval(std::max(0.0, hh.lo()), hh.hi())), sqrt(Interval(std::max(0.0, ll.lo()), ll.hi()))};
}

// ---------------------------------------------------------------------------
// inverse bound

namespace {

// Index sets that the potential cannot couple: returns the mode lists per
// class in one direction.
std::vector<std::vector<int>> direction_classes(const MixedSeries2D& w, bool x_dir, int n) {
  const int kmax = x_dir ? w.Kx() : w.Ky();
  const int kother = x_dir ? w.Ky() : w.Kx();
  const int s = ((x_dir ? w.bx() : w.by()) == Basis::Sin) ? 1 : 0;
  int parity = -1;
  bool mixed = false;
  for (int a = 0; a <= kmax && !mixed; ++a) {
    bool nz = false;
    for (int b = 0; b <= kother && !nz; ++b) {
      const Interval& v = x_dir ? w.c(a, b) : w.c(b, a);
      nz = !(v.lo() == 0.0 && v.hi() == 0.0);
    }
    if (!nz) continue;
    if (parity < 0) parity = a % 2;
    else if (parity != a % 2) mixed = true;
  }
  std::vector<int> all, odd, even;
  for (int i = 1; i <= n; ++i) {
    all.push_back(i);
    (i % 2 ? odd : even).push_back(i);
  }
  // coupling of i and k needs a + i + k + s even
  if (!mixed && (parity < 0 || (parity + s) % 2 == 0)) {
    std::vector<std::vector<int>> out{odd};
    if (!even.empty()) out.push_back(even);
    return out;
  }
  return {all};
}

// Rows (i, k) x columns a of int_0^1 e_a(t) sin(i pi t) sin(k pi t) dt.
MidRadMatrix pair_table(const std::vector<int>& idx, Basis basis, int kmax) {
  const std::size_t r = idx.size();
  MidRadMatrix t(r * r, static_cast<std::size_t>(kmax) + 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      for (int a = 0; a <= kmax; ++a) {
        if (basis == Basis::Cos) {
          t.set_point(i * r + k, a, modes::cos_sin_sin(a, idx[i], idx[k]));
        } else if (a > 0 && (a + idx[i] + idx[k]) % 2 == 1) {
          t.set(i * r + k, a, modes::sin_sin_sin(a, idx[i], idx[k]));
        }
      }
    }
  }
  return t;
}

struct RowInfo {
  double lambda_lo;
  double hs2;  // squared coupling of this row into the complement, rounded up
};

}  // namespace

InverseBound inverse_bound(const SineSeries2D& u, int p, int split_order) {
  check_p(p);
  if (split_order < 1) throw DomainError("split order must be positive");
  const DomainRect& d = u.domain();
  const Interval mw = d.mode_weight();
  InverseBound out;
  out.split_order = split_order;

  const MixedSeries2D w = potential(u, p);
  const double s = sup_u(u);
  out.w_sup = std::min(mul_up(pow_int(Interval(s), p - 1).hi(), double(p)), sum_abs(w));
  if (!std::isfinite(out.w_sup)) throw OverflowError("potential bound overflow");

  const Interval lam_q = d.lambda_outside(split_order);
  const Interval tail = Interval(1.0) - Interval(out.w_sup) / lam_q;
  if (!(tail.lo() > 0.0)) throw GapFailure("tail gap condition fails: lambda_Q <= sup |f'(u)|");
  out.tail_gap = tail.lo();

  // squared norms ||W phi_ij||^2 need the cosine series of W^2
  const MixedSeries2D w2 = multiply(w, w, std::max(kDefaultMaxOrder, 2 * std::max(w.Kx(), w.Ky())));
  auto g = [&](int a, int b) { return (a <= w2.Kx() && b <= w2.Ky()) ? w2.c(a, b) : Interval(0.0); };

  const auto cx = direction_classes(w, true, split_order);
  const auto cy = direction_classes(w, false, split_order);
  MidRadMatrix wt(static_cast<std::size_t>(w.Ky()) + 1, static_cast<std::size_t>(w.Kx()) + 1);
  for (int a = 0; a <= w.Kx(); ++a)
    for (int b = 0; b <= w.Ky(); ++b) wt.set(b, a, w.c(a, b));

  double block = std::numeric_limits<double>::infinity();
  std::vector<RowInfo> rows;
  out.classes = static_cast<int>(cx.size() * cy.size());
  for (const auto& xs : cx) {
    const MidRadMatrix ix = pair_table(xs, w.bx(), w.Kx());
    const MidRadMatrix z(multiply_abt(ix, wt));  // ((i,k), b)
    for (const auto& ys : cy) {
      const MidRadMatrix iy = pair_table(ys, w.by(), w.Ky());
      const IMatrix f = multiply_abt(z, iy);  // ((i,k), (j,l)), unit-square integrals
      const std::size_t nx = xs.size(), ny = ys.size(), dim = nx * ny;
      std::vector<Interval> rl(dim);
      for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) rl[i * ny + j] = sqrt(d.lambda(xs[i], ys[j]));
      MidRadMatrix bm(dim, dim);
      for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
          const std::size_t r = i * ny + j;
          Interval m2(0.0);
          for (std::size_t k = 0; k < nx; ++k) {
            for (std::size_t l = 0; l < ny; ++l) {
              const std::size_t c = k * ny + l;
              const Interval fv = f(i * nx + k, j * ny + l);
              const Interval t = Interval(4.0) * fv / (rl[r] * rl[c]);
              bm.set(r, c, (r == c ? Interval(1.0) : Interval(0.0)) - t);
              m2 += Interval(mul_down(fv.mig(), fv.mig()));
            }
          }
          // M_{ij,kl} = (W phi_ij, phi_kl) = |Omega| f, and by Parseval the sum of
          // M^2 over all (k,l) is (L1 L2 / 4) ||W phi_ij||^2
          const int ii = xs[i], jj = ys[j];
          const Interval wphi = mw * (g(0, 0) - g(2 * ii, 0) * Interval(0.5) - g(0, 2 * jj) * Interval(0.5) +
                                      g(2 * ii, 2 * jj) * Interval(0.25));
          const Interval full = mw * wphi;
          const Interval inside = sqr(d.measure()) * m2;
          const double rest = std::max(0.0, (full - inside).hi());
          const Interval lam = d.lambda(ii, jj);
          const double hs2 = (Interval(rest) / (sqr(mw) * lam * lam_q)).hi();
          rows.push_back({lam.lo(), hs2});
        }
      }
      const SpectrumBounds sb = sym_spectrum_bounds(bm);
      block = std::min(block, sb.min_abs_lo);
    }
  }
  out.block_gap = block;

  // coupling: Hilbert-Schmidt on the rows below a threshold, the uniform
  // bound Wbar / sqrt(lambda_b lambda_Q) on the rest
  std::sort(rows.begin(), rows.end(), [](const RowInfo& a, const RowInfo& b) { return a.lambda_lo < b.lambda_lo; });
  double best = std::numeric_limits<double>::infinity();
  double hs = 0.0;
  for (std::size_t t = 0; t <= rows.size(); ++t) {
    double high = 0.0;
    if (t < rows.size())
      high = (Interval(out.w_sup) / sqrt(Interval(rows[t].lambda_lo) * Interval(lam_q.lo()))).hi();
    best = std::min(best, add_up(sqrt_up(hs), high));
    if (t < rows.size()) hs = add_up(hs, rows[t].hs2);
  }
  out.coupling = best;

  const double gap = sub_down(std::min(out.block_gap, out.tail_gap), out.coupling);
  if (!(gap > 0.0)) throw NotInvertible("inverse of the linearization could not be bounded");
  out.K = Interval(1.0) / Interval(gap);
  return out;
}

InverseBound inverse_bound_auto(const SineSeries2D& u, int p, const InverseOptions& opt) {
  int n = opt.split_order > 0 ? opt.split_order : std::max(1, u.N());
  for (;;) {
    try {
      return inverse_bound(u, p, n);
    } catch (const GapFailure&) {
      if (2 * n > opt.max_split) throw;
    } catch (const NotInvertible&) {
      if (2 * n > opt.max_split) throw;
    }
    n *= 2;
  }
}

// ---------------------------------------------------------------------------
// Lipschitz constant and radii

Interval lipschitz_bound(const SineSeries2D& u, int p, const Interval& R) {
  check_p(p);
  if (R.lo() < 0.0) throw DomainError("trial radius must be non-negative");
  const Interval s(sup_u(u));
  Interval g(0.0);
  for (int k = 0; k <= p - 2; ++k) {
    const Interval c = embed_const(k + 3, u.domain());
    g += Interval(binom(p - 2, k)) * pow_int(s, p - 2 - k) * pow_int(c, k + 3) * pow_int(R, k);
  }
  return Interval(static_cast<double>(p * (p - 1))) * g;
}

KantorovichRadius kantorovich_radius(const KantorovichData& kd) {
  for (const Interval* v : {&kd.delta, &kd.K, &kd.g})
    if (v->lo() < 0.0) throw DomainError("Kantorovich data must be non-negative");
  KantorovichRadius out;
  out.h = sqr(kd.K) * kd.g * kd.delta;
  const Interval disc = Interval(1.0) - Interval(2.0) * out.h;
  if (disc.hi() < 0.0 || (disc.lo() < 0.0 && out.h.lo() > 0.5))
    throw ConditionFailure("Kantorovich condition 2 K^2 g delta <= 1 fails");
  if (disc.lo() < 0.0) throw ConditionFailure("Kantorovich condition cannot be decided at this precision");
  const Interval root = sqrt(disc);
  out.r_h1 = Interval(2.0) * kd.K * kd.delta / (Interval(1.0) + root);
  const Interval kg = kd.K * kd.g;
  if (kg.lo() > 0.0) {
    out.unique_radius = (Interval(1.0) + root) / kg;
  } else {
    const double big = std::numeric_limits<double>::max();
    out.unique_radius = Interval(big, big);
  }
  return out;
}

Interval linf_embedding_constant(const DomainRect& domain) {
  static std::mutex mu;
  static std::map<std::pair<double, double>, Interval> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({domain.L1(), domain.L2()});
    if (it != cache.end()) return it->second;
  }
  const Interval a = Interval(1.0) / sqr(Interval(domain.L1()));
  const Interval b = Interval(1.0) / sqr(Interval(domain.L2()));
  constexpr int M = 1000;
  double lo = 0.0, hi = 0.0;
  for (int i = 1; i <= M; ++i) {
    const double ai_lo = mul_down(a.lo(), double(i) * i), ai_hi = mul_up(a.hi(), double(i) * i);
    for (int j = 1; j <= M; ++j) {
      const double bj = double(j) * j;
      const double den_lo = add_down(ai_lo, mul_down(b.lo(), bj));
      const double den_hi = add_up(ai_hi, mul_up(b.hi(), bj));
      hi = add_up(hi, div_up(1.0, mul_down(den_lo, den_lo)));
      lo = add_down(lo, div_down(1.0, mul_up(den_hi, den_hi)));
    }
  }
  // modes with i > M or j > M: sum over the long index by an integral
  const Interval pi = iv_pi();
  const Interval m2(double(M) * M);
  const Interval t1 = pi / (Interval(8.0) * a * sqrt(a) * sqrt(b) * m2);
  const Interval t2 = pi / (Interval(8.0) * b * sqrt(b) * sqrt(a) * m2);
  const Interval sum(lo, add_up(hi, (t1 + t2).hi()));
  const Interval pi4 = sqr(sqr(pi));
  const Interval c = Interval(2.0) * sqrt(sum / pi4) / sqrt(domain.measure());
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(domain.L1(), domain.L2()), c);
  return c;
}

Interval linf_radius(const SineSeries2D& u, int p, const Interval& r_h1, const Interval& delta_l2) {
  check_p(p);
  if (r_h1.lo() < 0.0 || delta_l2.lo() < 0.0) throw DomainError("radii must be non-negative");
  const DomainRect& d = u.domain();
  const Interval s(sup_u(u));
  const Interval r(r_h1.hi());
  // ||f(u*) - f(u)||_2 <= sum_k C(p,k) S^{p-k} ||e||_{2k}^k
  Interval w = Interval(delta_l2.hi());
  for (int k = 1; k <= p; ++k)
    w += Interval(binom(p, k)) * pow_int(s, p - k) * pow_int(embed_const(2 * k, d) * r, k);
  return linf_embedding_constant(d) * w;
}

Interval linf_radius(const SineSeries2D& u, int p, const Interval& r_h1) {
  return linf_radius(u, p, r_h1, defect_bounds(u, p).l2);
}

// ---------------------------------------------------------------------------
// positiveness

namespace {

PositivityAudit positivity_from_scan(const SineSeries2D& u, const Interval& r_inf, int p, const DomainRect& domain,
                                     const InfScan& scan) {
  PositivityAudit a;
  a.lambda1 = first_eigenvalue_lower(domain);
  // (a) a point where u* = u - e is provably positive
  constexpr int kSamples = 17;
  std::vector<double> xs, ys;
  for (int k = 1; k <= kSamples; ++k) {
    xs.push_back(domain.L1() * k / (kSamples + 1));
    ys.push_back(domain.L2() * k / (kSamples + 1));
  }
  const IMatrix v = eval_grid(u, xs, ys);
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kSamples; ++i) {
    for (int j = 0; j < kSamples; ++j) {
      if (v(i, j).lo() > best) {
        best = v(i, j).lo();
        a.x0 = xs[i];
        a.y0 = ys[j];
      }
    }
  }
  a.point_margin = sub_down(best, r_inf.hi());
  a.subdomain_ok = a.point_margin > 0.0;

  // (b) sup (u*)_- <= r_inf + sup u_-
  a.sup_negative = add_up(r_inf.hi(), std::max(0.0, -scan.inf.lo()));
  a.sup_negative_pow = pow_int(Interval(a.sup_negative), p - 1).hi();
  a.spectral_margin = sub_down(a.lambda1.lo(), a.sup_negative_pow);
  a.spectral_ok = a.sup_negative_pow < a.lambda1.lo();

  a.positive = a.subdomain_ok && a.spectral_ok;
  if (!a.subdomain_ok) a.reason = "no positivity subdomain";
  else if (!a.spectral_ok) a.reason = "negative part too large for the first eigenvalue";
  else a.reason = "verified";
  return a;
}

}  // namespace

PositivityAudit positiveness_certificate(const SineSeries2D& u, const Interval& r_inf, int p, const DomainRect& domain,
                                         int scan_grid) {
  check_p(p);
  if (!(u.domain() == domain)) throw DomainError("series and domain differ");
  return positivity_from_scan(u, r_inf, p, domain, inf_scan(u, scan_grid));
}

// ---------------------------------------------------------------------------

CertifiedBall certify(const SineSeries2D& u, int p, const CertifyOptions& opt) {
  check_p(p);
  CertifiedBall ball;
  ball.center = u;
  ball.p = p;
  ball.defect = defect_bounds(u, p, opt.defect_box);
  ball.inverse = inverse_bound_auto(u, p, opt.inverse);
  ball.kd.delta = ball.defect.hminus1;
  ball.kd.K = ball.inverse.K;

  // the Lipschitz bound must hold on a ball containing the existence ball
  double R = mul_up(2.0, (ball.kd.K * ball.kd.delta).hi());
  KantorovichRadius kr;
  bool ok = false;
  for (int it = 0; it < opt.max_radius_iter; ++it) {
    ball.kd.g = lipschitz_bound(u, p, Interval(R));
    kr = kantorovich_radius(ball.kd);
    if (kr.r_h1.hi() <= R) {
      ok = true;
      break;
    }
    R = mul_up(2.0, kr.r_h1.hi());
  }
  if (!ok) throw ConditionFailure("radius iteration did not settle");
  ball.r_h1 = Interval(0.0, kr.r_h1.hi());
  const double uniq = std::min(kr.unique_radius.lo(), R);
  ball.unique_radius = Interval(uniq, uniq);

  ball.r_inf = linf_radius(u, p, ball.r_h1, ball.defect.l2);
  ball.r_inf = Interval(0.0, ball.r_inf.hi());
  const InfScan scan = inf_scan(u, opt.scan_grid);
  ball.inf_center = scan.inf;
  ball.neg_measure = scan.neg_measure;
  ball.audit = positivity_from_scan(u, ball.r_inf, p, u.domain(), scan);
  ball.positive = ball.audit.positive;
  if (!ball.positive && p % 2 == 0 && h01_norm(u).lo() > ball.r_h1.hi()) {
    // -Lap u* = u*^p >= 0 with u* != 0: positive by the strong maximum principle
    ball.positive = true;
    ball.audit.reason = "maximum principle (even exponent)";
  }
  return ball;
}

}  // namespace sobolev
