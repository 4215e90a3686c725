#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "sobolev/certifier.hpp"
#include "sobolev/decimal.hpp"
#include "sobolev/elementary.hpp"
#include "sobolev/embedding_bounds.hpp"

using namespace sobolev;

namespace {

const DomainRect kUnit{1.0, 1.0};

bool encloses(const Interval& x, const oracle::Bracket& b) { return x.lo() <= b.lo && b.hi <= x.hi(); }

}  // namespace

TEST_CASE("Talenti constant") {
  Interval t = talenti_constant(2, rational(4, 3));
  Interval inv_pi = Interval(1.0) / iv_pi();
  CHECK(t.intersects(inv_pi));
  CHECK(t.width() <= 1e-12);
  CHECK(encloses(talenti_constant(2, rational(6, 5)), oracle::kTalenti2_65));
  CHECK(std::isfinite(talenti_constant(2, 1.0 + 1e-9).hi()));
  CHECK_THROWS_AS(talenti_constant(2, 2.0), DomainError);
  CHECK_THROWS_AS(talenti_constant(2, 1.0), DomainError);
  CHECK_THROWS_AS(talenti_constant(1, 1.5), DomainError);
}

TEST_CASE("corollary bound on the unit square") {
  const Interval one(1.0);
  struct Row {
    double p, value;
  };
  for (Row r : {Row{3, 0.27991104681667}, Row{4, 0.31830988618379}, Row{5, 0.35780388458050}}) {
    Interval c = corollary_bound(2, r.p, one);
    CAPTURE(r.p);
    CHECK(testing_support::printed_within(c, r.value));
    CHECK(c.width() <= 1e-12);
  }
  CHECK(encloses(corollary_bound(3, 4.0, one), oracle::kCorollary3_4));
  CHECK_THROWS_AS(corollary_bound(2, 2.0, one), DomainError);
  CHECK_THROWS_AS(corollary_bound(3, 6.5, one), DomainError);
  CHECK_THROWS_AS(corollary_bound(2, 4.0, Interval(0.0)), DomainError);
  // |Omega|^{(2-q)/(2q)} scaling
  Interval c4 = corollary_bound(2, 4.0, Interval(4.0));
  CHECK(c4.intersects(corollary_bound(2, 4.0, one) * pow(Interval(4.0), Interval(0.25))));
}

TEST_CASE("spectral bound") {
  const Interval rho = first_eigenvalue_lower(kUnit);
  struct Row {
    double p, value;
  };
  for (Row r : {Row{3, 0.32964899322075}, Row{4, 0.39894228040144}, Row{5, 0.48909030972535}}) {
    Interval c = plum_bound(2, r.p, rho);
    CAPTURE(r.p);
    CHECK(testing_support::printed_within(c, r.value));
    CHECK(c.width() <= 1e-12);
  }
  // only rho.lo enters
  CHECK(plum_bound(2, 4.0, Interval(rho.lo(), rho.hi() + 5.0)) == plum_bound(2, 4.0, rho));
  CHECK(plum_bound(3, 4.0, Interval(10.0, 20.0)) == plum_bound(3, 4.0, Interval(10.0)));
  CHECK(encloses(plum_bound(3, 4.0, Interval(10.0)), oracle::kPlum3_4_rho10));
  CHECK_THROWS_AS(plum_bound(2, 1.5, rho), DomainError);
  CHECK_THROWS_AS(plum_bound(3, 7.0, rho), DomainError);
  CHECK_THROWS_AS(plum_bound(2, 4.0, Interval(0.0)), DomainError);
}

TEST_CASE("classical parameters") {
  ClassicalParams c = classical_params(2, 4.0, Interval(1.0), Interval(19.0));
  CHECK(c.q.contains(4.0 / 3.0));
  CHECK(c.nu == 2);
  ClassicalParams d = classical_params(3, 4.0, Interval(1.0), Interval(10.0));
  CHECK(d.s.contains(0.25));
}

TEST_CASE("smallest classical upper bound") {
  CHECK(classical_constant_upper(4.0, kUnit) == doctest::Approx(0.31830988618379).epsilon(1e-12));
  CHECK(classical_constant_upper(2.0, kUnit) >= 1.0 / std::sqrt(2 * M_PI * M_PI));
}

TEST_CASE("enclosure from a ball") {
  SineSeries2D u(kUnit, 1, {1.0});
  ExtremalBounds e = enclosure_from_ball(u, Interval(0.0), 3, true);
  const double ratio = std::sqrt(3.0) / (2 * M_PI);
  CHECK(e.lower == doctest::Approx(ratio).epsilon(1e-14));
  CHECK(e.lower <= e.upper);
  CHECK(e.upper - e.lower <= 1e-14);
  CHECK(e.lower <= 0.28524446071925);

  double prev = e.upper;
  for (double r : {1e-6, 1e-3, 0.1}) {
    ExtremalBounds x = enclosure_from_ball(u, Interval(0.0, r), 3, true);
    CHECK(x.upper >= prev);
    CHECK(x.lower == e.lower);
    prev = x.upper;
  }
  CHECK_THROWS_AS(enclosure_from_ball(u, Interval(0.0), 3, false), CertificateMissing);
  CHECK_THROWS_AS(enclosure_from_ball(u, Interval(0.0, 1.2), 3, true), HypothesisFailure);
}

TEST_CASE("best enclosure") {
  std::vector<ClassicalBound> cl{{BoundSource::corollary, Interval(0.3183098861837)},
                                 {BoundSource::plum, Interval(0.3989422804014)}};
  ExtremalBounds ex{0.2852444, 0.2852445, Interval(0.0), Interval(0.0)};
  EnclosureResult r = best_enclosure(4, kUnit, ex, cl);
  CHECK(r.upper == 0.2852445);
  CHECK(r.lower == 0.2852444);
  CHECK(r.upper_source == BoundSource::extremal);
  CHECK(r.lower_source == BoundSource::extremal);

  EnclosureResult none = best_enclosure(4, kUnit, std::nullopt, cl);
  CHECK(none.lower == 0.0);
  CHECK(none.upper == 0.3183098861837);
  CHECK(none.upper_source == BoundSource::corollary);
  CHECK(std::string(to_string(none.upper_source)) == "corollary");

  ExtremalBounds bad{0.5, 0.6, Interval(0.0), Interval(0.0)};
  CHECK_THROWS_AS(best_enclosure(4, kUnit, bad, {{BoundSource::corollary, Interval(0.318)}}), SoundnessViolation);
}

TEST_CASE("directed decimal output") {
  CHECK(decimal_directed(0.1, 3, false) == "0.100");
  CHECK(decimal_directed(0.1, 3, true) == "0.101");
  CHECK(decimal_directed(1.0 / 3.0, 5, false) == "0.33333");
  CHECK(decimal_directed(1.0 / 3.0, 5, true) == "0.33334");
  CHECK(decimal_directed(-1.0 / 3.0, 3, true) == "-0.333");
  CHECK(decimal_directed(1234.5, 3, true) == "1240");
  CHECK(decimal_directed(0.0, 5, true) == "0");
  for (double x : {0.28524446071925, 0.25712475017617, 1e-7 / 3}) {
    CHECK(std::strtod(decimal_directed(x, 14, false).c_str(), nullptr) <= x);
    CHECK(std::strtod(decimal_directed(x, 14, true).c_str(), nullptr) >= x);
  }
  CHECK(format_enclosure(0.25, 0.375, 3) == "0._{250}^{375}");
  CHECK(format_enclosure(0.28125, 0.2890625, 4) == "0.28_{12}^{91}");
  CHECK(format_enclosure(0.5, 0.5, 3) == "0.500");
  CHECK_THROWS_AS(format_enclosure(0.6, 0.5), FormatError);
}
