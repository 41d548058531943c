#pragma once

#include <functional>
#include <vector>

#include "fracmax/grid.hpp"
#include "fracmax/report.hpp"

namespace fracmax {

/// Linear sequential problem  D^alpha D^beta u + q(x) u = f(x)  on (a,b),
/// marched from u(a) = u_a with inner-derivative value D^beta u(a) = v_a.
struct LinearSFODE {
  Grid1D grid;
  double alpha = 0.75;
  double beta = 0.75;
  SampledFn q;   // coefficient; q <= 0 is the comparison-theorem regime
  SampledFn f;   // forcing
  double u_a = 0.0;
  double v_a = 0.0;
};

/// Implicit L1 march of the first-order-in-memory system v = D^beta u,
/// D^alpha v = f - q u. At every node the two history sums are assembled and
/// the local 2x2 system is solved exactly.
SampledFn solve_linear(const LinearSFODE& p);

/// Solves both problems (identical except forcings, f1 <= f2 node-wise) and
/// verifies the node-wise ordering u1 <= u2.
VerificationReport compare_linear(const LinearSFODE& p1, const LinearSFODE& p2, double tol);

struct SequentialTerm {
  double lambda = 1.0;  // >= 0
  double alpha = 0.75;
  double beta = 0.75;   // each in (0,1], 1 < alpha+beta <= 2
};

/// Multi-term nonlinear problem  sum_j lambda_j D^{alpha_j} D^{beta_j} u + F(x,u) = 0.
struct MultiTermSFODE {
  Grid1D grid;
  std::vector<SequentialTerm> terms;
  std::function<double(double, double)> F;  // (x, u)
  double u_a = 0.0;
  double picard_tol = 1e-10;
  int picard_max = 100;
};

/// Picard iteration: each sweep marches the linear multi-term problem with
/// forcing -F(x, u_prev). Throws with the last residual when picard_max is hit.
SampledFn solve_multiterm(const MultiTermSFODE& p, const SampledFn& initial_guess);

/// Linear envelopes of F:  mu2 u + q2(x) <= F(x,u) <= mu1 u + q1(x), mu_i < 0.
struct SandwichSpec {
  double mu1 = -1.0;
  double mu2 = -1.0;
  SampledFn q1;
  SampledFn q2;
  std::function<double(double, double)> F;
};

struct SandwichResult {
  VerificationReport report;
  SampledFn u;            // nonlinear solution
  SampledFn u_lower;      // envelope solution bounding u from below
  SampledFn u_upper;      // envelope solution bounding u from above
};

/// Solves the nonlinear single-term problem (alpha = beta) and its two linear
/// envelope problems D^a D^a w + mu_i w + q_i = 0 with the same initial data,
/// then verifies the node-wise sandwich. The envelope contract is sampled on
/// a 101-point lattice over the solution range widened by one unit; a
/// violation is a usage error naming the offending (x,u).
SandwichResult sandwich_check(const SandwichSpec& s, const MultiTermSFODE& p, double tol);

}  // namespace fracmax
