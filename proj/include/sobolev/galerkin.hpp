#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

#include "sobolev/sine_series.hpp"

namespace sobolev {

// Floating-point spectral Galerkin-Newton solver for -Lap u = u^p with zero
// boundary values. Nothing in here is rigorous; the certifier re-derives every
// claim from the returned coefficients.

struct SolverConfig {
  int p = 3;
  int N = 10;
  /// Stop when ||F|| <= newton_tol * ||Lambda a|| (Galerkin residual F).
  double newton_tol = 1e-13;
  int max_iter = 50;
  double damping = 1.0;
  /// Restrict to modes with odd i and j. Defaults to on for squares.
  std::optional<bool> symmetry;
};

struct NewtonRecord {
  int iteration = 0;
  double residual = 0.0;  // ||F||_2
  double relative = 0.0;  // ||F||_2 / ||Lambda a||_2
  double step = 0.0;
};

using NewtonObserver = std::function<void(const NewtonRecord&)>;

/// One-mode series c sin(pi x / L1) sin(pi y / L2) balancing the equation
/// against the first mode.
SineSeries2D initial_guess(int p, const DomainRect& domain);

/// Residual of the Galerkin system, F_ij = lambda_ij a_ij - (4/|Omega|) int u^p phi_ij,
/// in row-major order over all N x N modes.
std::vector<double> galerkin_residual_vector(const SineSeries2D& u, int p);
double galerkin_residual(const SineSeries2D& u, int p);

/// Jacobian dF/da over all N x N modes (row-major mode order).
Eigen::MatrixXd galerkin_jacobian(const SineSeries2D& u, int p);

/// Galerkin truncation of the target order N is taken from cfg.N; the guess
/// is zero padded or truncated to it.
SineSeries2D newton_solve(const SolverConfig& cfg, const SineSeries2D& guess,
                          const NewtonObserver& observer = {});

}  // namespace sobolev
