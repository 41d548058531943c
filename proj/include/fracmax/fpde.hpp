#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fracmax/grid.hpp"
#include "fracmax/report.hpp"

namespace fracmax {

/// Time-space fractional diffusion problem
///   D^alpha_t u = nu D^{beta1}_x D^{beta2}_x u + F,  (x,t) in (a,b) x (0,T],
/// with u(x,0) = phi(x), u(a,t) = psi_a(t), u(b,t) = psi_b(t).
struct DiffusionProblem {
  Grid1D xgrid;  // [a,b]
  Grid1D tgrid;  // [0,T]
  double alpha = 0.5;     // (0,1]; 1 degenerates to backward Euler in time
  double beta1 = 0.9;
  double beta2 = 0.9;     // (0,1] each, 1 < beta1+beta2 <= 2
  double nu = 1.0;
  std::function<double(double, double, double)> F;  // (x, t, u); u ignored unless nonlinear
  SampledFn phi;    // initial data on xgrid
  SampledFn psi_a;  // left boundary data on tgrid
  SampledFn psi_b;  // right boundary data on tgrid
  bool nonlinear = false;
  double picard_tol = 1e-10;
  int picard_max = 50;
  double picard_seed_shift = 0.0;  // added to the per-step initial iterate
};

/// Space-time solution samples, time-major: values[k * (nx+1) + i].
struct SolutionField {
  Grid1D xgrid;
  Grid1D tgrid;
  std::vector<double> values;
  std::string scheme_meta;

  double at(int k, int i) const {
    return values[static_cast<std::size_t>(k) * (xgrid.n + 1) + static_cast<std::size_t>(i)];
  }
  double& at(int k, int i) {
    return values[static_cast<std::size_t>(k) * (xgrid.n + 1) + static_cast<std::size_t>(i)];
  }
  double min_value() const;
  double max_value() const;
};

/// Implicit stepping: L1 discretization of the time Caputo derivative; the
/// spatial sequential operator is the product of two lower-triangular L1
/// matrices acting on interior nodes with Dirichlet rows from the boundary
/// data. Nonlinear forcing handled by per-step Picard iteration.
SolutionField solve_diffusion(const DiffusionProblem& p);

/// Boundary-minimum principle: min over the grid >= min over the parabolic
/// boundary (initial slice plus the two lateral boundaries) minus tol.
/// Requires F >= 0 on the grid; otherwise the report is informational.
VerificationReport verify_parabolic_min_principle(const SolutionField& u, const DiffusionProblem& p,
                                                  double tol);
/// Mirrored maximum principle under F <= 0.
VerificationReport verify_parabolic_max_principle(const SolutionField& u, const DiffusionProblem& p,
                                                  double tol);

/// Solves with phi and phi_bar under homogeneous Dirichlet data and asserts
///   sup |u - u_bar| <= ||phi - phi_bar||_inf + tol.
VerificationReport continuous_dependence_experiment(const DiffusionProblem& p,
                                                    const SampledFn& phi_bar, double tol);

/// Nonlinear F non-increasing in u: two solves from different per-step Picard
/// seeds must agree (uniqueness), and two solves from initial data g1 = p.phi
/// and g2 satisfy sup |u1-u2| <= ||g1-g2||_inf + tol (data stability).
std::vector<VerificationReport> nonlinear_uniqueness_check(const DiffusionProblem& p,
                                                           const SampledFn& g2, double tol);

/// Pseudo-parabolic problem
///   u_t = nu D^{1-alpha}_t [ D^{beta1}_x D^{beta2}_x u ] + F,
/// with Riemann-Liouville time derivative of the spatial-operator history.
struct PseudoParabolicProblem {
  Grid1D xgrid;
  Grid1D tgrid;
  double alpha = 0.5;  // (0,1]; 1 reduces D^{1-alpha} to the identity
  double beta1 = 0.9;
  double beta2 = 0.9;
  double nu = 1.0;
  std::function<double(double, double, double)> F;  // (x, t, u)
  SampledFn phi;
  SampledFn psi1;
  SampledFn psi2;
  bool nonlinear = false;
  double picard_tol = 1e-10;
  int picard_max = 50;
  double picard_seed_shift = 0.0;
};

/// Backward-Euler in time; the Riemann-Liouville factor is split via the
/// Caputo decomposition into an L1 history sum plus the initial-slice kernel
/// term; the current level is implicit and solved directly.
SolutionField solve_pseudo_parabolic(const PseudoParabolicProblem& p);

/// Sign principles (F, data sign-restricted), boundary-extremum principles,
/// two-run uniqueness, one report per theorem tested.
std::vector<VerificationReport> verify_pseudo_principles(const SolutionField& u,
                                                         const PseudoParabolicProblem& p,
                                                         double tol);

/// delta-stability of the pseudo-parabolic solution under perturbed initial data.
VerificationReport pseudo_continuous_dependence(const PseudoParabolicProblem& p,
                                                const SampledFn& phi_bar, double tol);

}  // namespace fracmax
