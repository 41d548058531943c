#pragma once

namespace fracmax {

/// Euler gamma function for real x away from the poles {0, -1, -2, ...}.
/// Lanczos rational approximation (g = 7, 9 coefficients) with the
/// reflection formula for x < 0.5; relative error below 1e-12 on [0.1, 50].
double gamma_fn(double x);

struct MLParams {
  double alpha = 1.0;       // first index, > 0
  double beta = 1.0;        // second index, > 0
  double series_tol = 1e-15;
  int max_terms = 2000;
};

/// Two-parameter Mittag-Leffler function, plain power series
///   E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta),
/// truncated once |term| < series_tol. Restricted to |z| <= 50.
/// Throws an accuracy error (with the partial sum in the message) when the
/// series has not converged within max_terms.
double mittag_leffler(const MLParams& p, double z);

/// Exact Riemann-Liouville derivative of the power (t-a)^{beta_exp-1}:
///   Gamma(beta_exp)/Gamma(beta_exp-alpha) * (t-a)^{beta_exp-alpha-1},
/// valid for beta_exp > alpha > 0.
double power_rule_rl(double beta_exp, double alpha, double t_minus_a);

}  // namespace fracmax
