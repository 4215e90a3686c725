#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "sobolev/certifier.hpp"
#include "sobolev/elementary.hpp"
#include "sobolev/embedding_bounds.hpp"
#include "sobolev/galerkin.hpp"

using namespace sobolev;

namespace {

const DomainRect kUnit{1.0, 1.0};

SineSeries2D one_mode(double c) { return SineSeries2D(kUnit, 1, {c}); }

const SineSeries2D& solution(int N) {
  static std::map<int, SineSeries2D> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  SolverConfig cfg;
  cfg.p = 3;
  cfg.N = N;
  return cache.emplace(N, newton_solve(cfg, initial_guess(3, kUnit))).first->second;
}

}  // namespace

TEST_CASE("first eigenvalue") {
  const Interval pi2 = sqr(iv_pi());
  CHECK(first_eigenvalue_lower(kUnit).mid() == doctest::Approx(19.7392088).epsilon(1e-8));
  CHECK(first_eigenvalue_lower(kUnit).intersects(Interval(2.0) * pi2));
  CHECK(first_eigenvalue_lower(DomainRect(2.0, 1.0)).intersects(rational(5, 4) * pi2));
  CHECK(first_eigenvalue_lower(DomainRect(2.0, 2.0)).intersects(first_eigenvalue_lower(kUnit) / Interval(4.0)));
  // the spectral bound of the classical table is consistent with 2 pi^2
  CHECK(testing_support::printed_within(pow_real(Interval(2.0) * first_eigenvalue_lower(kUnit), -0.25), 0.39894228040144));
}

TEST_CASE("defect of the zero series") {
  DefectBounds d = defect_bounds(SineSeries2D(kUnit, 3), 3);
  CHECK(d.hminus1 == Interval(0.0));
  CHECK(d.l2 == Interval(0.0));
}

TEST_CASE("defect of the one-mode balance point") {
  // u^3 = c^3/16 (3 s1 - s3)(3 t1 - t3): the modes (3,1), (1,3), (3,3) are
  // left over with coefficients -3c^3/16, -3c^3/16, c^3/16.
  const Interval pi = iv_pi();
  const Interval c = Interval(4.0) * sqrt(Interval(2.0)) * pi / Interval(3.0);
  SineSeries2D u = initial_guess(3, kUnit);
  const Interval c3 = pow_int(c, 3) / Interval(16.0);
  const Interval r31 = Interval(3.0) * c3, r33 = c3;
  const Interval w(0.25), pi2 = sqr(pi);
  const Interval h = sqrt(w * (Interval(2.0) * sqr(r31) / (Interval(10.0) * pi2) + sqr(r33) / (Interval(18.0) * pi2)));
  const Interval l2 = sqrt(w * (Interval(2.0) * sqr(r31) + sqr(r33)));
  DefectBounds d = defect_bounds(u, 3);
  CHECK(d.hminus1.intersects(h));
  CHECK(d.l2.intersects(l2));
  CHECK(d.hminus1.hi() <= h.hi() * (1 + 1e-12));
  // N = 1 cannot be certified: the defect is of order one
  CHECK(d.hminus1.lo() > 1.0);
  CHECK_THROWS_AS(certify(u, 3), ConditionFailure);
}

TEST_CASE("defects at increasing N") {
  double prev = 1e300;
  for (int N : {4, 8, 12}) {
    double d = defect_bounds(solution(N), 3).hminus1.hi();
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("even exponent defect is bounded") {
  SolverConfig cfg;
  cfg.p = 2;
  cfg.N = 8;
  SineSeries2D u = newton_solve(cfg, initial_guess(2, kUnit));
  DefectBounds d = defect_bounds(u, 2);
  CHECK(d.hminus1.hi() > 0.0);
  CHECK(d.hminus1.hi() <= d.l2.hi() / std::sqrt(first_eigenvalue_lower(kUnit).lo()) * (1 + 1e-12));
  // a bigger projection box can only tighten the tail estimate
  CHECK(defect_bounds(u, 2, 64).hminus1.hi() <= d.hminus1.hi() * 1.5);
}

TEST_CASE("inverse bound of the Laplacian") {
  // with ||v|| = ||grad v|| on H^1_0 and the dual norm on H^-1, -Lap is an isometry
  InverseBound ib = inverse_bound(SineSeries2D(kUnit, 4), 3, 4);
  // K is an upper bound of the exact norm 1
  CHECK(ib.K.hi() >= 1.0);
  CHECK(ib.K.hi() <= 1.0 + 1e-12);

  InverseBound tiny = inverse_bound(one_mode(1e-6), 3, 4);
  CHECK(tiny.K.lo() >= 1.0 - 1e-12);
  CHECK(tiny.K.hi() <= 1.0 + 1e-4);
}

TEST_CASE("inverse bound against the Galerkin matrix") {
  const SineSeries2D& u = solution(10);
  InverseBound ib = inverse_bound_auto(u, 3);
  CHECK(ib.split_order >= 10);
  Eigen::MatrixXd J = galerkin_jacobian(u, 3);
  const int n = 10;
  std::mt19937_64 rng(99);
  std::normal_distribution<double> G;
  const double w = 0.25;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd v(n * n);
    for (int k = 0; k < n * n; ++k) v[k] = G(rng);
    Eigen::VectorXd Lv = J * v;
    double nv = 0, nLv = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const int k = (i - 1) * n + (j - 1);
        const double lam = M_PI * M_PI * (i * i + j * j);
        nv += w * lam * v[k] * v[k];
        nLv += w * Lv[k] * Lv[k] / lam;
      }
    CHECK(std::sqrt(nLv) >= std::sqrt(nv) / ib.K.hi());
  }
}

TEST_CASE("tail gap failure") {
  // a huge potential cannot be separated at split order 1
  CHECK_THROWS_AS(inverse_bound(one_mode(40.0), 3, 1), GapFailure);
}

TEST_CASE("Lipschitz bound") {
  CHECK(lipschitz_bound(SineSeries2D(kUnit, 2), 3, Interval(0.0)).contains(0.0));
  const SineSeries2D& u = solution(12);
  double prev = 0.0;
  for (double R : {0.0, 1e-6, 1e-3, 0.1, 1.0}) {
    double g = lipschitz_bound(u, 3, Interval(R)).hi();
    CHECK(g >= prev);
    prev = g;
  }
  // crude hand bound 6 (S C_3^3 + C_4^4 R) with the larger of the classical constants
  const Interval m = kUnit.measure(), rho = first_eigenvalue_lower(kUnit);
  const double c3 = std::max(corollary_bound(2, 3, m).hi(), plum_bound(2, 3, rho).hi());
  const double c4 = std::max(corollary_bound(2, 4, m).hi(), plum_bound(2, 4, rho).hi());
  const double S = sup_abs_bound(u).hi();
  const double R = 1e-3;
  const double crude = 6.0 * (S * c3 * c3 * c3 + c4 * c4 * c4 * c4 * R);
  const Interval g = lipschitz_bound(u, 3, Interval(R));
  CHECK(std::isfinite(g.hi()));
  CHECK(g.hi() <= crude * (1 + 1e-12));
  CHECK_THROWS_AS(lipschitz_bound(u, 3, Interval(-1.0, 0.0)), DomainError);
}

TEST_CASE("Kantorovich radius") {
  KantorovichRadius lin = kantorovich_radius({Interval(1e-3), Interval(1.0), Interval(0.0)});
  CHECK(lin.r_h1.contains(1e-3));
  CHECK(lin.unique_radius.lo() > 1e300);

  // 2 K^2 delta g = 1: double root r = 1 / (K g)
  KantorovichRadius dbl = kantorovich_radius({Interval(0.5), Interval(1.0), Interval(1.0)});
  CHECK(dbl.r_h1.contains(1.0));
  CHECK(dbl.unique_radius.contains(1.0));

  CHECK_THROWS_AS(kantorovich_radius({Interval(0.6), Interval(1.0), Interval(1.0)}), ConditionFailure);
  CHECK_THROWS_AS(kantorovich_radius({Interval(-1.0, 0.0), Interval(1.0), Interval(1.0)}), DomainError);
}

TEST_CASE("L-infinity embedding constant") {
  Interval c = linf_embedding_constant(kUnit);
  CHECK(c.lo() <= oracle::kLinfUnitSquare.lo);
  CHECK(c.hi() >= oracle::kLinfUnitSquare.hi);
  CHECK(c.width() <= 1e-6);
  // v = sin sin: ||v||_inf / ||Lap v||_2 = 1 / (2 pi^2 / 2)
  CHECK(c.hi() >= 1.0 / (M_PI * M_PI));
  for (double t : {0.5, 2.0, 3.0}) {
    Interval ct = linf_embedding_constant(DomainRect(t, t));
    CHECK(ct.intersects(Interval(t) * c));
  }
}

TEST_CASE("L-infinity radius") {
  SineSeries2D u = one_mode(5.9);
  CHECK(linf_radius(u, 3, Interval(0.0), Interval(0.0)).contains(0.0));
  double prev = 0.0;
  for (double r : {0.0, 1e-12, 1e-8, 1e-4}) {
    double ri = linf_radius(u, 3, Interval(r), Interval(1e-9)).hi();
    CHECK(ri >= prev);
    prev = ri;
  }
}

TEST_CASE("positiveness certificate") {
  PositivityAudit a = positiveness_certificate(one_mode(5.92), Interval(1e-6), 3, kUnit, 64);
  CHECK(a.positive);
  CHECK(a.reason == "verified");
  CHECK(a.spectral_margin > 19.0);

  PositivityAudit small = positiveness_certificate(one_mode(1e-3), Interval(1.0), 3, kUnit, 64);
  CHECK_FALSE(small.positive);
  CHECK(small.reason == "no positivity subdomain");

  // r_inf = sqrt(lambda_1) exactly at the threshold: strict inequality fails
  const Interval lam = first_eigenvalue_lower(kUnit);
  PositivityAudit edge = positiveness_certificate(one_mode(5.92), sqrt(lam), 3, kUnit, 64);
  CHECK(edge.subdomain_ok);
  CHECK_FALSE(edge.spectral_ok);
  CHECK_FALSE(edge.positive);

  // monotone in r_inf
  for (double r : {1e-6, 1e-3, 0.5, 2.0}) {
    PositivityAudit x = positiveness_certificate(one_mode(5.92), Interval(r), 3, kUnit, 64);
    if (x.positive) CHECK(positiveness_certificate(one_mode(5.92), Interval(r / 2), 3, kUnit, 64).positive);
  }
  CHECK_THROWS_AS(positiveness_certificate(one_mode(1.0), Interval(0.0), 3, DomainRect(2.0, 1.0)), DomainError);
}

TEST_CASE("certified ball at N = 20") {
  const SineSeries2D& u = solution(20);
  CertifiedBall b = certify(u, 3);
  CHECK(b.positive);
  CHECK(b.r_h1.hi() > 0.0);
  CHECK(b.r_h1.hi() <= b.unique_radius.lo());
  CHECK(h01_norm(u).lo() > 2 * b.r_h1.hi());
  CHECK(b.kd.delta.hi() < 1e-6);
  CHECK(b.audit.sup_negative_pow * 1e4 < first_eigenvalue_lower(kUnit).lo());
  // a floating solve at a larger N stays inside the ball
  const SineSeries2D& v = solution(28);
  SineSeries2D diff(kUnit, 28);
  for (int i = 1; i <= 28; ++i)
    for (int j = 1; j <= 28; ++j) {
      double d = v.a(i, j).mid() - (i <= 20 && j <= 20 ? u.a(i, j).mid() : 0.0);
      diff.a(i, j) = Interval(d);
    }
  CHECK(h01_norm(diff).hi() <= b.r_h1.hi());
}
