#pragma once

#include <cstddef>

#include "fracmax/grid.hpp"
#include "fracmax/report.hpp"

namespace fracmax {

/// First node index attaining the global minimum/maximum (ties break to the
/// smallest index).
std::size_t locate_extremum(const SampledFn& f, ExtremumReport::Kind kind);

/// Sequential-derivative bound at the global minimum:
///   sum > 1: D^a D^b f(x*) >= (a+b-1)/Gamma(2-a-b) (x*-a)^{-a-b} (f(a)-f(x*)) >= 0
///   sum < 1: mirrored <=
///   sum = 1: |D^a D^b f(x*)| <= tol
/// A non-constant f whose extremum sits at the left endpoint is reported as
/// not applicable (the bound is singular there). For constant f the first
/// interior node is used so both sides evaluate to zero.
ExtremumReport check_sequential_min_bound(const SampledFn& f, double alpha, double beta,
                                          double tol);

/// Mirror image at the global maximum.
ExtremumReport check_sequential_max_bound(const SampledFn& f, double alpha, double beta,
                                          double tol);

/// Caputo bound at the global maximum (grid normalized to a = 0):
///   Caputo^a f(t0) >= t0^{-a}/Gamma(1-a) (f(t0) - f(0)) >= 0.
ExtremumReport check_caputo_max_bound(const SampledFn& f, double alpha, double tol);

/// Riemann-Liouville bound at the global maximum:
///   D^a f(t0) >= t0^{-a}/Gamma(1-a) f(t0); nonnegative when f(t0) >= 0.
ExtremumReport check_rl_max_bound(const SampledFn& f, double alpha, double tol);

struct Order12Reports {
  ExtremumReport caputo;
  ExtremumReport riemann_liouville;
};

/// Order-(1,2) bounds at the global minimum (both derivative flavors):
///   Caputo: D^a f(t0) >= t0^{-a}/Gamma(2-a) [(a-1)(f(0)-f(t0)) - t0 f'(0)]
///   RL:     D^a f(t0) >= t0^{-a}/Gamma(2-a) (a-1) f(t0)
/// The minimum must be interior (both endpoint cases excluded).
Order12Reports check_order12_min_bounds(const SampledFn& f, double alpha, double tol);

}  // namespace fracmax
