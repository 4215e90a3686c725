#include "sobolev/elementary.hpp"

#include <mpfr.h>

#include <cmath>

namespace sobolev {

namespace {

class Mp {
 public:
  Mp() { mpfr_init2(v_, 53); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

double eval_rounded(UnaryFn f, double x, mpfr_rnd_t mode) {
  Mp in, out;
  mpfr_set_d(in.get(), x, MPFR_RNDN);  // exact at 53 bits
  f(out.get(), in.get(), mode);
  return rnd::checked(mpfr_get_d(out.get(), mode));
}

double pow_rounded(double x, double y, mpfr_rnd_t mode) {
  Mp a, b, out;
  mpfr_set_d(a.get(), x, MPFR_RNDN);
  mpfr_set_d(b.get(), y, MPFR_RNDN);
  mpfr_pow(out.get(), a.get(), b.get(), mode);
  return rnd::checked(mpfr_get_d(out.get(), mode));
}

// Whether some t = offset + 2k (k integer) may lie in [tlo, thi]. Errs on
// the side of answering yes.
bool may_hit(double tlo, double thi, double offset) {
  const double k = std::ceil(rnd::sub_down(tlo, offset) / 2.0);
  return rnd::add_down(offset, 2.0 * k) <= thi;
}

}  // namespace

Interval exp(const Interval& a) {
  return Interval(eval_rounded(mpfr_exp, a.lo(), MPFR_RNDD),
                  eval_rounded(mpfr_exp, a.hi(), MPFR_RNDU));
}

Interval log(const Interval& a) {
  if (!(a.lo() > 0.0)) throw DomainError("log of interval with nonpositive part");
  return Interval(eval_rounded(mpfr_log, a.lo(), MPFR_RNDD),
                  eval_rounded(mpfr_log, a.hi(), MPFR_RNDU));
}

Interval sin(const Interval& a) {
  if (a.width() >= 6.0) return Interval(-1.0, 1.0);
  const Interval pi = iv_pi();
  const double tlo = (Interval(a.lo()) / pi).lo();
  const double thi = (Interval(a.hi()) / pi).hi();
  double lo = std::min(eval_rounded(mpfr_sin, a.lo(), MPFR_RNDD),
                       eval_rounded(mpfr_sin, a.hi(), MPFR_RNDD));
  double hi = std::max(eval_rounded(mpfr_sin, a.lo(), MPFR_RNDU),
                       eval_rounded(mpfr_sin, a.hi(), MPFR_RNDU));
  if (may_hit(tlo, thi, 0.5)) hi = 1.0;
  if (may_hit(tlo, thi, -0.5)) lo = -1.0;
  return Interval(std::max(lo, -1.0), std::min(hi, 1.0));
}

Interval cos(const Interval& a) {
  if (a.width() >= 6.0) return Interval(-1.0, 1.0);
  const Interval pi = iv_pi();
  const double tlo = (Interval(a.lo()) / pi).lo();
  const double thi = (Interval(a.hi()) / pi).hi();
  double lo = std::min(eval_rounded(mpfr_cos, a.lo(), MPFR_RNDD),
                       eval_rounded(mpfr_cos, a.hi(), MPFR_RNDD));
  double hi = std::max(eval_rounded(mpfr_cos, a.lo(), MPFR_RNDU),
                       eval_rounded(mpfr_cos, a.hi(), MPFR_RNDU));
  if (may_hit(tlo, thi, 0.0)) hi = 1.0;
  if (may_hit(tlo, thi, 1.0)) lo = -1.0;
  return Interval(std::max(lo, -1.0), std::min(hi, 1.0));
}

Interval pow(const Interval& x, const Interval& y) {
  if (!(x.lo() > 0.0)) throw DomainError("pow with nonpositive base");
  const double xs[2] = {x.lo(), x.hi()};
  const double ys[2] = {y.lo(), y.hi()};
  double lo = rnd::kInf, hi = -rnd::kInf;
  for (double xb : xs) {
    for (double yb : ys) {
      lo = std::min(lo, pow_rounded(xb, yb, MPFR_RNDD));
      hi = std::max(hi, pow_rounded(xb, yb, MPFR_RNDU));
    }
  }
  return Interval(lo, hi);
}

Interval pow_real(const Interval& x, double y) { return pow(x, Interval(y)); }

Interval rational(long long num, long long den) {
  constexpr long long kExact = 1LL << 53;
  if (num > kExact || num < -kExact || den > kExact || den < -kExact)
    throw DomainError("rational operand not exactly representable");
  return Interval(static_cast<double>(num)) / Interval(static_cast<double>(den));
}

Interval iv_elem(ElemFn fn, const Interval& a, double param) {
  switch (fn) {
    case ElemFn::sqrt: return sqrt(a);
    case ElemFn::exp: return exp(a);
    case ElemFn::ln: return log(a);
    case ElemFn::sin: return sin(a);
    case ElemFn::cos: return cos(a);
    case ElemFn::pow_real: return pow_real(a, param);
    case ElemFn::pow_int: {
      if (param != std::floor(param)) throw DomainError("pow_int with non-integer exponent");
      return pow_int(a, static_cast<int>(param));
    }
  }
  throw DomainError("unknown elementary function");
}

}  // namespace sobolev
