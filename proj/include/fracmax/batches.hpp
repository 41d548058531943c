#pragma once

#include <cstdint>
#include <vector>

#include "fracmax/report.hpp"

namespace fracmax {

/// Randomized verification batteries behind `fracmax verify` and the
/// acceptance suite. Every battery is deterministic in (seed, sizes) and
/// scales its tolerances by tol_scale.

/// Sequential-derivative extremum bounds: `cases` applicable checks per case
/// region (sum > 1, sum < 1, sum = 1) for both the minimum and maximum
/// variants, random trig polynomials, tolerance 1e-4 (1 + ||f||_inf); the
/// sum = 1 identity uses 5e-3 (1 + ||f'||_inf) at interior extrema.
std::vector<VerificationReport> extremum_battery(int cases, int n, std::uint64_t seed,
                                                 double tol_scale);

/// Caputo / Riemann-Liouville single-order maximum bounds and the
/// order-(1,2) minimum bounds on random trig polynomials.
std::vector<VerificationReport> extremum_single_order_battery(int cases, int n,
                                                              std::uint64_t seed,
                                                              double tol_scale);

/// Sign property of the linear sequential ODE: q <= -0.2, f >= 0.1, initial
/// value matched to the equation at the left endpoint; solution must stay
/// below 1e-6 (1 + ||f||_inf).
std::vector<VerificationReport> ode_sign_batch(int cases, int n, std::uint64_t seed,
                                               double tol_scale);

/// Forcing-ordered pairs share all data; node-wise ordering of solutions.
std::vector<VerificationReport> ode_comparison_batch(int cases, int n, std::uint64_t seed,
                                                     double tol_scale);

/// Nonlinear sandwich: F(x,u) = mu u + A sin u + g(x) with exact linear
/// envelopes mu u + g(x) +/- A.
std::vector<VerificationReport> ode_sandwich_batch(int cases, int n, std::uint64_t seed,
                                                   double tol_scale);

/// Diffusion boundary-minimum principle on random F >= 0 scenarios
/// (sign = +1) or the mirrored maximum principle for F <= 0 (sign = -1).
std::vector<VerificationReport> diffusion_principle_batch(int cases, int nx_nodes, int nt_nodes,
                                                          std::uint64_t seed, double tol_scale,
                                                          int sign);

/// Continuous dependence under homogeneous Dirichlet data, sine perturbations.
std::vector<VerificationReport> diffusion_dependence_batch(int pairs, int nx_nodes, int nt_nodes,
                                                           std::uint64_t seed, double tol_scale);

/// Nonlinear uniqueness (two Picard seeds) and data stability.
std::vector<VerificationReport> diffusion_nonlinear_batch(int cases, int nx_nodes, int nt_nodes,
                                                          std::uint64_t seed, double tol_scale);

/// Pseudo-parabolic sign/boundary principles, uniqueness and delta-stability.
std::vector<VerificationReport> pseudo_principles_batch(int cases, int nx_nodes, int nt_nodes,
                                                        std::uint64_t seed, double tol_scale);

/// Elliptic weak principles on hypothesis-satisfying random scenarios plus
/// the strong-principle (homogeneous, zero-boundary) case.
std::vector<VerificationReport> elliptic_principles_batch(int cases, int dims, int n_nodes,
                                                          std::uint64_t seed, double tol_scale);

/// Cylinder sign principles, extremum attainment on Gamma, re-solve identity.
std::vector<VerificationReport> cylinder_batch(int cases, int nx_nodes, int ny_nodes,
                                               std::uint64_t seed, double tol_scale);

}  // namespace fracmax
