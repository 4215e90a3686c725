#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles/oracles.hpp"
#include "sobolev/elementary.hpp"
#include "sobolev/gamma.hpp"
#include "sobolev/interval.hpp"
#include "sobolev/midrad.hpp"
#include "sobolev/simd/dot.hpp"
#include "sobolev/sym_eig.hpp"

using namespace sobolev;

namespace {

bool encloses(const Interval& x, const oracle::Bracket& b) { return x.lo() <= b.lo && b.hi <= x.hi(); }

}  // namespace

TEST_CASE("arithmetic on small intervals") {
  CHECK(iv_arith(ArithOp::add, {1, 2}, {3, 4}) == Interval(4, 6));
  CHECK(iv_arith(ArithOp::mul, {1, 2}, {-1, 1}) == Interval(-2, 2));
  CHECK(iv_arith(ArithOp::sub, {1, 2}, {3, 4}) == Interval(-3, -1));
  CHECK_THROWS_AS(iv_arith(ArithOp::div, {1, 2}, {-1, 1}), DivisionByZeroInterval);
  CHECK_THROWS_AS(Interval(2, 1), DomainError);
}

TEST_CASE("outward rounding of inexact results") {
  Interval third = Interval(1.0) / Interval(3.0);
  CHECK(third.lo() < third.hi());
  CHECK(third.lo() == std::nextafter(third.hi(), 0.0));
  Interval s = Interval(0.1) + Interval(0.2);
  CHECK(s.lo() <= 0.30000000000000004);
  CHECK(s.hi() >= 0.3);
}

TEST_CASE("overflow is an error") {
  const double big = 1e308;
  CHECK_THROWS_AS(Interval(big) * Interval(10.0), OverflowError);
  CHECK_THROWS_AS(Interval(big) + Interval(big), OverflowError);
  CHECK_THROWS_AS(exp(Interval(1000.0)), OverflowError);
}

TEST_CASE("elementary functions") {
  CHECK(sqrt(Interval(4, 9)) == Interval(2, 3));
  CHECK(pow_int(Interval(-2, 1), 2) == Interval(0, 4));
  CHECK(pow_int(Interval(-2, 1), 3) == Interval(-8, 1));

  Interval s = sin(Interval(0.0, iv_pi().hi() / 2));
  CHECK(s.lo() <= 0.0);
  CHECK(s.hi() >= 1.0);
  CHECK(s.hi() <= 1.0 + 1e-15);

  CHECK(log(Interval(1.0)) == Interval(0.0));
  CHECK(exp(Interval(0.0)) == Interval(1.0));
  CHECK(cos(Interval(0.0)).contains(1.0));
  CHECK(pow(Interval(8.0), rational(1, 3)).contains(2.0));

  CHECK_THROWS_AS(log(Interval(-1.0, 2.0)), DomainError);
  CHECK_THROWS_AS(sqrt(Interval(-1.0, 2.0)), DomainError);
  CHECK_NOTHROW(sqrt(Interval(0.0, 2.0)));
  CHECK_THROWS_AS(pow_real(Interval(0.0, 2.0), 0.5), DomainError);
  CHECK_THROWS_AS(iv_elem(ElemFn::pow_int, Interval(2.0), 1.5), DomainError);
}

TEST_CASE("point inputs give enclosures within a few ulp") {
  for (double x : {0.3, 1.7, 12.5, 100.0}) {
    for (Interval y : {exp(Interval(x)), log(Interval(x)), sin(Interval(x)), sqrt(Interval(x))}) {
      double ulp = std::nextafter(y.mag(), 1e300) - y.mag();
      CHECK(y.width() <= 4 * ulp);
    }
  }
}

TEST_CASE("pi") {
  Interval pi = iv_pi();
  CHECK(pi.mid() == doctest::Approx(3.14159265358979).epsilon(1e-14));
  CHECK(pi.lo() > 3.141592);
  CHECK(std::nextafter(pi.lo(), 4.0) >= pi.hi());
  CHECK(encloses(pi * pi, oracle::kPiSquared));
}

TEST_CASE("gamma") {
  CHECK(iv_gamma(Interval(4.0)).contains(6.0));
  CHECK(iv_gamma(Interval(1.0)).contains(1.0));
  Interval g = iv_gamma(Interval(0.5));
  CHECK(g.intersects(sqrt(iv_pi())));
  CHECK(encloses(iv_gamma(rational(5, 3)) * iv_gamma(rational(4, 3)), oracle::kGamma53Gamma43));
  CHECK_THROWS_AS(iv_gamma(Interval(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(iv_gamma(Interval(-0.5)), DomainError);

  for (const auto& c : oracle::kGammaCases) {
    Interval v = iv_gamma(Interval(c.x));
    CAPTURE(c.x);
    CHECK(encloses(v, c.value));
    if (c.x >= 0.5 && c.x <= 10.0) CHECK(v.width() <= 1e-12 * v.mag());
  }
}

TEST_CASE("gamma on a wide argument covers the minimum") {
  // Gamma has its minimum 0.8856... near 1.4616
  Interval g = iv_gamma(Interval(1.2, 1.8));
  CHECK(g.lo() <= 0.8856031944108887);
  CHECK(g.hi() >= std::tgamma(1.2));
  CHECK(g.hi() >= std::tgamma(1.8));
}

TEST_CASE("symmetric eigenvalue bounds") {
  Interval e = iv_sym_eig_min(SymMatrix::identity(3));
  CHECK(e.contains(1.0));
  CHECK(e.width() <= 1e-12);
  CHECK(iv_sym_eig_min(SymMatrix::diagonal({2.0, 5.0})).contains(2.0));

  SymMatrix m(2);
  m(0, 0) = Interval(2.0);
  m(1, 1) = Interval(2.0);
  m(0, 1) = Interval(1.0);
  CHECK(m(1, 0) == Interval(1.0));
  CHECK(iv_sym_eig_min(m).contains(1.0));

  // interval family: eigenvalues of [[a, 0], [0, 3]] with a in [1, 1.5]
  SymMatrix f = SymMatrix::diagonal({1.0, 3.0});
  f(0, 0) = Interval(1.0, 1.5);
  Interval fe = iv_sym_eig_min(f);
  CHECK(fe.lo() <= 1.0);
  CHECK(fe.hi() >= 1.0);
}

TEST_CASE("simd kernels agree bit for bit with the scalar kernel") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  std::uniform_real_distribution<double> R(0.0, 1e-12);
  std::vector<simd::Isa> isas{simd::Isa::scalar};
  for (simd::Isa isa : {simd::Isa::avx2, simd::Isa::neon})
    if (simd::isa_available(isa)) isas.push_back(isa);
  MESSAGE("vector ISA under test: " << simd::isa_name(isas.back()));

  for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 1001u}) {
    std::vector<double> xm(n), xr(n), ym(n), yr(n);
    for (std::size_t i = 0; i < n; ++i) {
      xm[i] = U(rng) * std::ldexp(1.0, int(i % 20) - 10);
      ym[i] = U(rng);
      xr[i] = R(rng);
      yr[i] = R(rng);
    }
    for (bool radii : {false, true}) {
      simd::DotAcc ref;
      simd::dot_segment_scalar(ref, xm.data(), radii ? xr.data() : nullptr, ym.data(),
                               radii ? yr.data() : nullptr, n);
      for (simd::Isa isa : isas) {
        simd::DotAcc acc;
        simd::segment_fn(isa)(acc, xm.data(), radii ? xr.data() : nullptr, ym.data(),
                              radii ? yr.data() : nullptr, n);
        for (int l = 0; l < simd::kLanes; ++l) {
          CHECK(acc.s[l] == ref.s[l]);
          CHECK(acc.c[l] == ref.c[l]);
          CHECK(acc.abs[l] == ref.abs[l]);
          CHECK(acc.rad[l] == ref.rad[l]);
        }
        CHECK(simd::finalize(acc) == simd::finalize(ref));
      }
    }
  }
}

TEST_CASE("matrix products are identical under every ISA") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  IMatrix a(9, 13), b(11, 13);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 13; ++j) a(i, j) = Interval(U(rng));
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 13; ++j) {
      double c = U(rng);
      b(i, j) = Interval(c, c + 1e-9);
    }
  const simd::Isa saved = simd::active_isa();
  simd::set_isa(simd::Isa::scalar);
  IMatrix ref = multiply_abt(MidRadMatrix(a), MidRadMatrix(b));
  for (simd::Isa isa : {simd::Isa::avx2, simd::Isa::neon}) {
    if (!simd::isa_available(isa)) continue;
    simd::set_isa(isa);
    IMatrix got = multiply_abt(MidRadMatrix(a), MidRadMatrix(b));
    CHECK(got.data() == ref.data());
  }
  simd::set_isa(saved);

  // containment against a plain interval evaluation
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t k = 0; k < 11; ++k) {
      Interval s(0.0);
      for (std::size_t j = 0; j < 13; ++j) s += a(i, j) * b(k, j);
      CHECK(ref(i, k).intersects(s));
    }
}
