#include "fracmax/extremum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracmax/fracops.hpp"
#include "fracmax/specfun.hpp"

namespace fracmax {

namespace {

constexpr double kSumEqEps = 1e-14;

bool is_constant(const SampledFn& f) {
  for (double v : f.values)
    if (v != f.values.front()) return false;
  return true;
}

// Resolves the node the bound is evaluated at. Constant samples move to the
// first interior node; otherwise an extremum at the left endpoint makes the
// check inapplicable.
struct ExtremumSite {
  std::size_t index = 0;
  bool applicable = true;
  std::string note;
};

ExtremumSite resolve_site(const SampledFn& f, ExtremumReport::Kind kind, bool interior_only) {
  ExtremumSite site;
  if (is_constant(f)) {
    site.index = 1;
    site.note = "constant samples; first interior node by convention";
    return site;
  }
  site.index = locate_extremum(f, kind);
  if (site.index == 0) {
    site.applicable = false;
    site.note = "extremum at the left endpoint; bound singular there";
  } else if (interior_only && site.index == f.values.size() - 1) {
    site.applicable = false;
    site.note = "extremum at the right endpoint; interior point required";
  }
  return site;
}

ExtremumReport::CaseTag classify(double alpha, double beta) {
  const double s = alpha + beta;
  if (std::abs(s - 1.0) < kSumEqEps) return ExtremumReport::CaseTag::sum_eq_1;
  return s > 1.0 ? ExtremumReport::CaseTag::sum_gt_1 : ExtremumReport::CaseTag::sum_lt_1;
}

void require_order01(double v, const char* who) {
  if (!(v > 0.0) || !(v < 1.0)) throw std::domain_error(std::string(who) + ": orders must lie in (0,1)");
}

ExtremumReport sequential_bound(const SampledFn& f, double alpha, double beta, double tol,
                                ExtremumReport::Kind kind) {
  require_order01(alpha, "check_sequential_bound");
  require_order01(beta, "check_sequential_bound");
  f.validate();

  ExtremumReport r;
  r.kind = kind;
  r.case_tag = classify(alpha, beta);
  r.tolerance = tol;

  const ExtremumSite site = resolve_site(f, kind, /*interior_only=*/false);
  r.note = site.note;
  r.f_at_a = f.values.front();
  if (!site.applicable) {
    r.applicable = false;
    r.x_star = f.grid.node(static_cast<int>(site.index));
    r.f_at_xstar = f.values[site.index];
    return r;
  }

  const std::size_t i = site.index;
  r.x_star = f.grid.node(static_cast<int>(i));
  r.f_at_xstar = f.values[i];

  const SampledFn d = sequential_caputo(f, alpha, beta);
  r.lhs = d.values[i];

  const double s = alpha + beta;
  if (r.case_tag == ExtremumReport::CaseTag::sum_eq_1) {
    r.rhs = 0.0;
    r.margin = -std::abs(r.lhs);
    r.pass = r.margin >= -tol;
    return r;
  }

  const double dist = r.x_star - f.grid.a;
  r.rhs = (s - 1.0) / gamma_fn(2.0 - s) * std::pow(dist, -s) * (r.f_at_a - r.f_at_xstar);

  // min & sum>1: lhs >= rhs; min & sum<1: lhs <= rhs; max cases mirrored.
  const bool ge_type = (kind == ExtremumReport::Kind::min) == (s > 1.0);
  r.margin = ge_type ? r.lhs - r.rhs : r.rhs - r.lhs;
  r.pass = r.margin >= -tol;
  return r;
}

}  // namespace

std::size_t locate_extremum(const SampledFn& f, ExtremumReport::Kind kind) {
  if (f.values.empty()) throw std::invalid_argument("locate_extremum: empty samples");
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.values.size(); ++i) {
    if (kind == ExtremumReport::Kind::min ? f.values[i] < f.values[best]
                                          : f.values[i] > f.values[best])
      best = i;
  }
  return best;
}

ExtremumReport check_sequential_min_bound(const SampledFn& f, double alpha, double beta,
                                          double tol) {
  return sequential_bound(f, alpha, beta, tol, ExtremumReport::Kind::min);
}

ExtremumReport check_sequential_max_bound(const SampledFn& f, double alpha, double beta,
                                          double tol) {
  return sequential_bound(f, alpha, beta, tol, ExtremumReport::Kind::max);
}

ExtremumReport check_caputo_max_bound(const SampledFn& f, double alpha, double tol) {
  require_order01(alpha, "check_caputo_max_bound");
  f.validate();

  ExtremumReport r;
  r.kind = ExtremumReport::Kind::max;
  r.case_tag = ExtremumReport::CaseTag::single_order;
  r.tolerance = tol;
  r.f_at_a = f.values.front();

  const ExtremumSite site = resolve_site(f, r.kind, /*interior_only=*/false);
  r.note = site.note;
  r.x_star = f.grid.node(static_cast<int>(site.index));
  r.f_at_xstar = f.values[site.index];
  if (!site.applicable) {
    r.applicable = false;
    return r;
  }

  r.lhs = caputo(f, alpha).values[site.index];
  const double t0 = r.x_star - f.grid.a;
  r.rhs = std::pow(t0, -alpha) / gamma_fn(1.0 - alpha) * (r.f_at_xstar - r.f_at_a);
  r.margin = r.lhs - r.rhs;
  r.pass = r.margin >= -tol;
  return r;
}

ExtremumReport check_rl_max_bound(const SampledFn& f, double alpha, double tol) {
  require_order01(alpha, "check_rl_max_bound");
  f.validate();

  ExtremumReport r;
  r.kind = ExtremumReport::Kind::max;
  r.case_tag = ExtremumReport::CaseTag::single_order;
  r.tolerance = tol;
  r.f_at_a = f.values.front();

  const ExtremumSite site = resolve_site(f, r.kind, /*interior_only=*/false);
  r.note = site.note;
  r.x_star = f.grid.node(static_cast<int>(site.index));
  r.f_at_xstar = f.values[site.index];
  if (!site.applicable) {
    r.applicable = false;
    return r;
  }

  r.lhs = rl_derivative(f, alpha).values[site.index];
  const double t0 = r.x_star - f.grid.a;
  r.rhs = std::pow(t0, -alpha) / gamma_fn(1.0 - alpha) * r.f_at_xstar;
  r.margin = r.lhs - r.rhs;
  // f(t0) >= 0 makes rhs >= 0, so lhs >= rhs also proves the nonnegativity part.
  r.pass = r.margin >= -tol;
  if (r.f_at_xstar >= 0.0 && r.lhs < -tol) {
    r.pass = false;
    r.note = "nonnegativity corollary violated";
  }
  return r;
}

Order12Reports check_order12_min_bounds(const SampledFn& f, double alpha, double tol) {
  if (!(alpha > 1.0) || !(alpha < 2.0))
    throw std::domain_error("check_order12_min_bounds: order must lie in (1,2)");
  f.validate();

  Order12Reports out;
  ExtremumReport base;
  base.kind = ExtremumReport::Kind::min;
  base.case_tag = ExtremumReport::CaseTag::single_order;
  base.tolerance = tol;
  base.f_at_a = f.values.front();

  const ExtremumSite site = resolve_site(f, base.kind, /*interior_only=*/true);
  base.note = site.note;
  base.x_star = f.grid.node(static_cast<int>(site.index));
  base.f_at_xstar = f.values[site.index];
  if (!site.applicable) {
    base.applicable = false;
    out.caputo = base;
    out.caputo.note = "caputo variant: " + base.note;
    out.riemann_liouville = base;
    out.riemann_liouville.note = "riemann-liouville variant: " + base.note;
    return out;
  }

  const std::size_t i = site.index;
  const double h = f.grid.h;
  const double t0 = base.x_star - f.grid.a;
  // One-sided second-order derivative at the left endpoint.
  const double fp0 = (-3.0 * f.values[0] + 4.0 * f.values[1] - f.values[2]) / (2.0 * h);
  const double g2 = gamma_fn(2.0 - alpha);

  const SampledFn dc = caputo_order12(f, alpha);
  out.caputo = base;
  out.caputo.lhs = dc.values[i];
  out.caputo.rhs =
      std::pow(t0, -alpha) / g2 * ((alpha - 1.0) * (base.f_at_a - base.f_at_xstar) - t0 * fp0);
  out.caputo.margin = out.caputo.lhs - out.caputo.rhs;
  out.caputo.pass = out.caputo.margin >= -tol;
  out.caputo.note = "caputo variant";
  if (fp0 <= 0.0 && out.caputo.lhs < -tol) {
    out.caputo.pass = false;
    out.caputo.note = "caputo variant: f'(0) <= 0 corollary violated";
  }

  out.riemann_liouville = base;
  out.riemann_liouville.lhs = dc.values[i] +
                              base.f_at_a * std::pow(t0, -alpha) / gamma_fn(1.0 - alpha) +
                              fp0 * std::pow(t0, 1.0 - alpha) / g2;
  out.riemann_liouville.rhs = std::pow(t0, -alpha) / g2 * (alpha - 1.0) * base.f_at_xstar;
  out.riemann_liouville.margin = out.riemann_liouville.lhs - out.riemann_liouville.rhs;
  out.riemann_liouville.pass = out.riemann_liouville.margin >= -tol;
  out.riemann_liouville.note = "riemann-liouville variant";
  if (base.f_at_xstar >= 0.0 && out.riemann_liouville.lhs < -tol) {
    out.riemann_liouville.pass = false;
    out.riemann_liouville.note = "riemann-liouville variant: f(t0) >= 0 corollary violated";
  }
  return out;
}

}  // namespace fracmax
