#pragma once

#include "fracmax/grid.hpp"
#include "fracmax/linalg.hpp"

namespace fracmax {

/// Left-sided Riemann-Liouville integral I^alpha, alpha in (0,1], by
/// product-trapezoidal quadrature: f is piecewise linear, the kernel moments
/// of (t-s)^{alpha-1} are integrated exactly per cell. Value at the left
/// endpoint is 0. Exact (to rounding) for piecewise-linear f.
SampledFn rl_integral(const SampledFn& f, double alpha);

/// Left-sided Caputo derivative, alpha in (0,1), by the L1 scheme
/// (piecewise-linear f, exact kernel weights). Value at the left endpoint
/// is 0. Accuracy O(h^{2-alpha}) for C^2 functions.
SampledFn caputo(const SampledFn& f, double alpha);

/// Riemann-Liouville derivative via the decomposition
///   D^alpha f = Caputo^alpha f + f(a) (t-a)^{-alpha} / Gamma(1-alpha).
/// The kernel is singular at the left endpoint; node a carries a quiet-NaN
/// sentinel rather than a value.
SampledFn rl_derivative(const SampledFn& f, double alpha);

/// Sequential Caputo derivative D^alpha D^beta: literal composition of two
/// L1 operators, inner order beta first, outer alpha second. Orders in (0,1];
/// order exactly 1 degenerates to the backward difference.
SampledFn sequential_caputo(const SampledFn& f, double alpha, double beta);

/// Single Caputo derivative of order alpha in (1,2), computed as
/// I^{2-alpha} applied to second differences of f. Comparator for the
/// sequential derivative (the two do not agree in general) and evaluator
/// for the order-(1,2) extremum bounds.
SampledFn caputo_order12(const SampledFn& f, double alpha);

struct FracLaplacianSpec {
  double delta = 0.5;  // in (0,1)
  int dim = 1;
  double c_norm = 0.0;  // delta 2^{2 delta} Gamma((N+2 delta)/2) / (pi^{N/2} Gamma(1-delta))
  // Principal value realized by symmetric treatment of the singular cell pair.
  static FracLaplacianSpec make(double delta);
  /// Accepts a caller-supplied c_norm but asserts it against the formula.
  static FracLaplacianSpec with_c_norm(double delta, double c_norm);
};

/// Regional fractional Laplacian on Omega = (grid.a, grid.b):
///   (-Delta)^delta u(y) = c_norm P.V. int_Omega (u(y)-u(xi)) / |y-xi|^{1+2 delta} dxi.
/// Piecewise-linear u; kernel moments exact per cell. At interior nodes the
/// singular cell pair is folded symmetrically: the odd (slope) part cancels
/// and the even (curvature) part integrates to a finite value for any
/// delta in (0,1). Constants map to exactly zero.
SampledFn regional_frac_laplacian(const SampledFn& f, const FracLaplacianSpec& spec);

// Dense operator matrices for the implicit solvers. Rows act on full node
// vectors (including boundary nodes); row 0 of the derivative matrices is
// zero, matching the value-at-a convention of the node-wise operators.

/// (n+1)x(n+1) lower-triangular L1 matrix W with (W f)_i = Caputo^alpha f(t_i).
/// Accepts alpha in (0,1]; alpha = 1 is the backward difference.
DenseMatrix caputo_l1_matrix(const Grid1D& g, double alpha);

/// Composition matrix of the sequential derivative, W_alpha * W_beta.
DenseMatrix sequential_caputo_matrix(const Grid1D& g, double alpha, double beta);

/// (n+1)x(n+1) matrix of the regional fractional Laplacian weights; rows
/// annihilate constants by construction.
DenseMatrix regional_laplacian_matrix(const Grid1D& g, const FracLaplacianSpec& spec);

}  // namespace fracmax
