#include "sobolev/gamma.hpp"

#include <cmath>

#include "sobolev/elementary.hpp"

namespace sobolev {

namespace {

// Bernoulli numbers B_2 .. B_22 as exact fractions.
struct Bern {
  long long num, den;
};
constexpr Bern kBernoulli[] = {
    {1, 6},       {-1, 30},      {1, 42},        {-1, 30},       {5, 66},     {-691, 2730},
    {7, 6},       {-3617, 510},  {43867, 798},   {-174611, 330}, {854513, 138},
};
constexpr int kTerms = 10;  // B_2 .. B_20 are summed, B_22 bounds the remainder

constexpr double kReductionTarget = 12.0;

// Location of the minimum of Gamma on (0, inf) and a lower bound for the
// minimum value.
constexpr double kArgminLo = 1.4616321449683622;
constexpr double kArgminHi = 1.4616321449683625;
constexpr double kMinValueLo = 0.8856031944108869;

Interval gamma_point(double x) {
  if (x >= kReductionTarget) return exp(lgamma_stirling(Interval(x)));
  const int k = static_cast<int>(std::ceil(kReductionTarget - x));
  const Interval xi(x);
  const Interval y = xi + Interval(static_cast<double>(k));
  // x (x+1) ... (x+k-1), multiplied from the top so the last factor is x
  Interval prod(1.0);
  for (int j = k - 1; j >= 0; --j) prod = prod * (xi + Interval(static_cast<double>(j)));
  return exp(lgamma_stirling(y)) / prod;
}

}  // namespace

Interval lgamma_stirling(const Interval& y) {
  if (y.lo() < kReductionTarget) throw DomainError("Stirling series used below its window");
  const Interval half(0.5);
  const Interval two_pi = Interval(2.0) * iv_pi();
  Interval s = (y - half) * log(y) - y + half * log(two_pi);

  const Interval z = Interval(1.0) / y;
  const Interval z2 = z * z;
  Interval zpow = z;
  for (int k = 1; k <= kTerms; ++k) {
    const Bern b = kBernoulli[k - 1];
    const long long scale = static_cast<long long>(2 * k) * (2 * k - 1);
    s = s + rational(b.num, b.den * scale) * zpow;
    zpow = zpow * z2;
  }
  // The remainder has the sign of the first omitted term and is smaller in
  // magnitude; zpow now holds y^{-21} and is largest at y.lo.
  const Bern next = kBernoulli[kTerms];
  const long long scale = static_cast<long long>(2 * (kTerms + 1)) * (2 * (kTerms + 1) - 1);
  const double bound = (rational(std::llabs(next.num), next.den * scale) * Interval(zpow.hi())).hi();
  return widen(s, bound);
}

Interval iv_gamma(const Interval& a) {
  if (!(a.lo() > 0.0)) throw DomainError("Gamma requires a positive argument");
  if (a.is_point()) return gamma_point(a.lo());
  const Interval glo = gamma_point(a.lo());
  const Interval ghi = gamma_point(a.hi());
  if (a.hi() <= kArgminLo) return Interval(ghi.lo(), glo.hi());
  if (a.lo() >= kArgminHi) return Interval(glo.lo(), ghi.hi());
  return Interval(std::min({kMinValueLo, glo.lo(), ghi.lo()}), std::max(glo.hi(), ghi.hi()));
}

}  // namespace sobolev
