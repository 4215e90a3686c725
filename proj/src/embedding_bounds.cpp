#include "sobolev/embedding_bounds.hpp"

#include <cmath>
#include <limits>

#include "sobolev/elementary.hpp"
#include "sobolev/gamma.hpp"

namespace sobolev {

namespace {

bool corollary_range(int n, double p) {
  if (n < 2 || !std::isfinite(p)) return false;
  const double lo = double(n) / (n - 1);
  if (!(p > lo)) return false;
  if (n >= 3 && !(p < 2.0 * n / (n - 2))) return false;
  return true;
}

bool plum_range(int n, double p) {
  if (n < 2 || !std::isfinite(p) || p < 2.0) return false;
  if (n >= 3 && p > 2.0 * n / (n - 2)) return false;
  return true;
}

Interval conjugate_q(int n, double p) { return Interval(double(n)) * Interval(p) / (Interval(double(n)) + Interval(p)); }

}  // namespace

ClassicalParams classical_params(int n, double p, const Interval& measure, const Interval& rho) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  ClassicalParams c;
  c.n = n;
  c.p = p;
  c.q = conjugate_q(n, p);
  c.measure = measure;
  c.rho = rho;
  const Interval ni{double(n)};
  c.s = ni * (Interval(1.0) / Interval(p) - Interval(0.5) + Interval(1.0) / ni);
  c.nu = std::max(1, static_cast<int>(std::floor(p / 2.0)));
  return c;
}

Interval talenti_constant(int n, const Interval& q) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  const Interval ni{double(n)};
  if (!(q.lo() > 1.0) || !(q.hi() < double(n))) throw DomainError("Talenti constant needs 1 < q < n");
  const Interval one(1.0);
  const Interval inv_q = one / q;
  const Interval pi = iv_pi();
  Interval t = one / sqrt(pi);
  t *= pow(ni, -inv_q);
  t *= pow((q - one) / (ni - q), one - inv_q);
  const Interval n_over_q = ni / q;
  const Interval bracket = iv_gamma(one + ni * Interval(0.5)) * iv_gamma(ni) /
                           (iv_gamma(n_over_q) * iv_gamma(one + ni - n_over_q));
  t *= pow(bracket, one / ni);
  return t;
}

Interval talenti_constant(int n, double q) { return talenti_constant(n, Interval(q)); }

Interval corollary_bound(int n, double p, const Interval& measure) {
  if (!corollary_range(n, p)) throw DomainError("exponent outside the range of the Talenti-based bound");
  if (!(measure.lo() > 0.0)) throw DomainError("domain measure must be positive");
  const Interval q = conjugate_q(n, p);
  const Interval expo = (Interval(2.0) - q) / (Interval(2.0) * q);
  return pow(measure, expo) * talenti_constant(n, q);
}

Interval plum_bound(int n, double p, const Interval& rho) {
  if (!plum_range(n, p)) throw DomainError("exponent outside the range of the spectral bound");
  if (!(rho.lo() > 0.0)) throw DomainError("rho must be positive");
  const Interval r(rho.lo());
  const Interval pi_(p);
  const Interval one(1.0);
  if (n == 2) {
    const int nu = static_cast<int>(std::floor(p / 2.0));
    Interval c = pow(Interval(0.5), Interval(0.5) + Interval(double(2 * nu - 3)) / pi_);
    Interval prod(1.0);
    for (int k = 0; k + 2 <= nu; ++k) prod *= pi_ * Interval(0.5) - Interval(double(k));
    c *= pow(prod, Interval(2.0) / pi_);
    c *= pow(r, -(one / pi_));
    return c;
  }
  const Interval ni{double(n)};
  Interval s = ni * (one / pi_ - Interval(0.5) + one / ni);
  // s is in [0, 1] on the admissible range; clip rounding spill
  s = Interval(std::max(0.0, s.lo()), std::min(1.0, s.hi()));
  const Interval base = (ni - one) / (sqrt(ni) * (ni - Interval(2.0)));
  return pow(base, one - s) * pow(r, -(s * Interval(0.5)));
}

double classical_constant_upper(double p, const DomainRect& domain) {
  double best = std::numeric_limits<double>::infinity();
  if (corollary_range(2, p)) best = std::min(best, corollary_bound(2, p, domain.measure()).hi());
  if (plum_range(2, p)) best = std::min(best, plum_bound(2, p, domain.lambda(1, 1)).hi());
  if (!std::isfinite(best)) throw DomainError("no classical embedding bound applies to this exponent");
  return best;
}

const char* to_string(BoundSource s) {
  switch (s) {
    case BoundSource::none: return "none";
    case BoundSource::extremal: return "extremal";
    case BoundSource::corollary: return "corollary";
    case BoundSource::plum: return "plum";
  }
  return "none";
}

ExtremalBounds enclosure_from_ball(const SineSeries2D& u, const Interval& r_h1, int p, bool positivity_verified,
                                   const PositivityHint& hint) {
  if (!positivity_verified) throw CertificateMissing("positiveness of the enclosed solution is not verified");
  if (p < 2) throw DomainError("exponent must be at least 2");
  if (r_h1.lo() < 0.0) throw DomainError("radius must be non-negative");
  ExtremalBounds b;
  b.h01 = h01_norm(u);
  const double two_r = rnd::mul_up(2.0, r_h1.hi());
  if (!(b.h01.lo() > two_r)) throw HypothesisFailure("||u||_{H^1_0} <= 2r, the ball may contain zero");
  b.lp = lp_norm(u, double(p + 1), hint);
  b.lower = rnd::div_down(b.lp.lo(), b.h01.hi());
  b.upper = rnd::div_up(b.lp.hi(), rnd::sub_down(b.h01.lo(), two_r));
  return b;
}

EnclosureResult best_enclosure(int p, const DomainRect& domain, const std::optional<ExtremalBounds>& extremal,
                               const std::vector<ClassicalBound>& classical) {
  EnclosureResult r;
  r.p = p;
  r.domain = domain;
  r.upper = std::numeric_limits<double>::infinity();
  if (extremal) {
    r.lower = extremal->lower;
    r.lower_source = BoundSource::extremal;
    r.upper = extremal->upper;
    r.upper_source = BoundSource::extremal;
  }
  for (const auto& c : classical) {
    if (c.value.hi() < r.upper) {
      r.upper = c.value.hi();
      r.upper_source = c.source;
    }
  }
  if (!std::isfinite(r.upper)) throw DomainError("no upper bound supplied");
  if (r.lower > r.upper) throw SoundnessViolation("lower bound of the embedding constant exceeds an upper bound");
  for (const auto& c : classical)
    if (r.lower > c.value.hi()) throw SoundnessViolation("extremal lower bound exceeds a classical upper bound");
  return r;
}

}  // namespace sobolev
