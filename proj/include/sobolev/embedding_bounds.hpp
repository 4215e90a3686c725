#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sobolev/domain.hpp"
#include "sobolev/interval.hpp"
#include "sobolev/sine_series.hpp"

namespace sobolev {

/// Exponent bookkeeping for the classical bounds on H^1_0 -> L^p.
struct ClassicalParams {
  int n = 2;
  double p = 4.0;
  Interval q;        // n p / (n + p)
  Interval measure;  // |Omega|
  Interval rho;      // lower spectral point of -Laplace
  Interval s;        // n (1/p - 1/2 + 1/n), Plum part b
  int nu = 1;        // largest integer <= p / 2, Plum part a
};

ClassicalParams classical_params(int n, double p, const Interval& measure, const Interval& rho);

/// Sharp whole-space Sobolev constant for ||u||_{L^{nq/(n-q)}} <= T ||grad u||_{L^q}.
Interval talenti_constant(int n, const Interval& q);
Interval talenti_constant(int n, double q);

/// |Omega|^{(2-q)/(2q)} T with q = n p / (n + p).
Interval corollary_bound(int n, double p, const Interval& measure);

/// Spectral bound; only rho.lo is used since rho enters with a negative power.
Interval plum_bound(int n, double p, const Interval& rho);

/// Smallest valid upper bound of the embedding constant from the classical
/// formulas on a rectangle (rho is the exact first eigenvalue enclosure).
double classical_constant_upper(double p, const DomainRect& domain);

enum class BoundSource { none, extremal, corollary, plum };
const char* to_string(BoundSource s);

struct ExtremalBounds {
  double lower = 0.0;
  double upper = 0.0;
  Interval lp;   // ||u||_{L^{p+1}}
  Interval h01;  // ||u||_{H^1_0}
};

/// Two-sided bounds of C_{p+1} from a certified ball of radius r_h1 around u
/// containing the positive solution. Throws CertificateMissing if positivity
/// was not verified and HypothesisFailure if ||u|| <= 2 r.
ExtremalBounds enclosure_from_ball(const SineSeries2D& u, const Interval& r_h1, int p,
                                   bool positivity_verified, const PositivityHint& hint = {});

struct ClassicalBound {
  BoundSource source = BoundSource::corollary;
  Interval value;
};

struct EnclosureResult {
  int p = 0;  // Lebesgue exponent
  DomainRect domain;
  double lower = 0.0;
  double upper = 0.0;
  BoundSource lower_source = BoundSource::none;
  BoundSource upper_source = BoundSource::none;
};

/// Combine the extremal enclosure with classical upper bounds. Throws
/// SoundnessViolation when the lower bound exceeds an upper bound.
EnclosureResult best_enclosure(int p, const DomainRect& domain, const std::optional<ExtremalBounds>& extremal,
                               const std::vector<ClassicalBound>& classical);

}  // namespace sobolev
