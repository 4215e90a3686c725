#pragma once

#include <string>

#include "sobolev/domain.hpp"
#include "sobolev/interval.hpp"
#include "sobolev/sine_series.hpp"

namespace sobolev {

// Rigorous a-posteriori analysis of an approximate solution u of
// -Lap u = f(u), f(u) = u^p (even p) or |u|^{p-1} u (odd p). H^1_0 carries the
// norm ||grad v||_{L^2} and H^-1 its dual norm, so -Lap is an isometry.

/// pi^2 (1/L1^2 + 1/L2^2)
Interval first_eigenvalue_lower(const DomainRect& domain);

struct DefectBounds {
  Interval hminus1;  // bound of ||Lap u + f(u)||_{H^-1}
  Interval l2;       // bound of ||Lap u + f(u)||_{L^2}
};

/// Odd p: exact finite sine series of the residual. Even p: the cosine series
/// of u^p is projected onto sine modes inside a box of order `box` (0 picks
/// 2pN) and the remainder is bounded through Parseval.
DefectBounds defect_bounds(const SineSeries2D& u, int p, int box = 0);

struct InverseBound {
  Interval K;            // ||L^{-1}||_{H^-1 -> H^1_0} <= K.hi
  int split_order = 0;   // N' actually used
  double block_gap = 0;  // lower bound of min |spec| of the finite block
  double tail_gap = 0;   // 1 - Wbar / lambda_Q
  double coupling = 0;   // bound of the off-diagonal block
  double w_sup = 0;      // Wbar >= sup |f'(u)|
  int classes = 1;       // parity blocks assembled
};

/// Bound for the inverse of L = -Lap - f'(u) with the modes i, j <= split_order
/// treated by a verified eigenvalue enclosure and the rest by a gap argument.
/// Throws GapFailure when lambda_Q <= Wbar and NotInvertible when the combined
/// lower bound is not positive.
InverseBound inverse_bound(const SineSeries2D& u, int p, int split_order);

struct InverseOptions {
  int split_order = 0;   // 0: use u.N()
  int max_split = 160;   // doubling stops here
};

/// inverse_bound with N' doubled on GapFailure / NotInvertible.
InverseBound inverse_bound_auto(const SineSeries2D& u, int p, const InverseOptions& opt = {});

/// Lipschitz constant of u -> f'(u) (into operators H^1_0 -> H^-1) on the
/// closed ball of radius R around u, from Hoelder's inequality and the
/// classical embedding constants.
Interval lipschitz_bound(const SineSeries2D& u, int p, const Interval& R);

struct KantorovichData {
  Interval delta;
  Interval K;
  Interval g;
};

struct KantorovichRadius {
  Interval h;              // K^2 g delta
  Interval r_h1;           // existence radius (use hi)
  Interval unique_radius;  // uniqueness radius (use lo)
};

/// Newton-Kantorovich ball. 2h = 1 is accepted (double root); 2h > 1 throws
/// ConditionFailure.
KantorovichRadius kantorovich_radius(const KantorovichData& kd);

/// c with ||v||_inf <= c ||Lap v||_{L^2} for every v in H^2 cap H^1_0.
Interval linf_embedding_constant(const DomainRect& domain);

/// ||u* - u||_inf bound for the solution u* within r_h1 of u in H^1_0.
Interval linf_radius(const SineSeries2D& u, int p, const Interval& r_h1, const Interval& delta_l2);
Interval linf_radius(const SineSeries2D& u, int p, const Interval& r_h1);

struct PositivityAudit {
  bool positive = false;
  bool subdomain_ok = false;  // some point with u(x0) - r_inf > 0
  bool spectral_ok = false;   // (r_inf + sup u_-)^{p-1} < lambda_1
  double x0 = 0.0, y0 = 0.0;
  double point_margin = 0.0;     // lower bound of u(x0) - r_inf
  double sup_negative = 0.0;     // upper bound of sup (u*)_-
  double sup_negative_pow = 0.0; // its (p-1)-th power, rounded up
  double spectral_margin = 0.0;  // lambda_1.lo - sup_negative_pow
  Interval lambda1;
  std::string reason;
};

PositivityAudit positiveness_certificate(const SineSeries2D& u, const Interval& r_inf, int p,
                                         const DomainRect& domain, int scan_grid = 256);

struct CertifiedBall {
  SineSeries2D center;
  int p = 0;
  DefectBounds defect;
  InverseBound inverse;
  KantorovichData kd;
  Interval r_h1;
  Interval r_inf;
  Interval unique_radius;
  Interval inf_center;       // enclosure of inf u over the domain
  double neg_measure = 0.0;  // measure where u may be negative
  bool positive = false;
  PositivityAudit audit;
};

struct CertifyOptions {
  InverseOptions inverse;
  int defect_box = 0;
  int scan_grid = 256;
  int max_radius_iter = 8;
};

/// Full chain defect -> K -> g -> radius -> r_inf -> positiveness.
CertifiedBall certify(const SineSeries2D& u, int p, const CertifyOptions& opt = {});

}  // namespace sobolev
