#include "fracmax/batches.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fracmax/elliptic.hpp"
#include "fracmax/extremum.hpp"
#include "fracmax/families.hpp"
#include "fracmax/fode.hpp"
#include "fracmax/fpde.hpp"
#include "fracmax/rng.hpp"

namespace fracmax {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void tag(std::vector<VerificationReport>& out, VerificationReport r, int case_id) {
  std::ostringstream os;
  os << (r.note.empty() ? "" : r.note + "; ") << "case " << case_id;
  r.note = os.str();
  out.push_back(std::move(r));
}

VerificationReport from_extremum(const ExtremumReport& e, const char* principle, int case_id) {
  VerificationReport r = VerificationReport::make(principle, e.lhs, e.x_star, kNaN, e.rhs,
                                                  e.margin, e.tolerance);
  r.applicable = e.applicable;
  std::ostringstream os;
  os << to_string(e.case_tag) << " " << to_string(e.kind) << "; case " << case_id;
  if (!e.note.empty()) os << "; " << e.note;
  r.note = os.str();
  return r;
}

}  // namespace

std::vector<VerificationReport> extremum_battery(int cases, int n, std::uint64_t seed,
                                                 double tol_scale) {
  std::vector<VerificationReport> out;
  const Grid1D g = Grid1D::over(0.0, 1.0, n);
  Xoshiro256ss rng(seed);

  struct Region {
    const char* name;
    int id;
  };
  const Region regions[3] = {{"sum_gt_1", 0}, {"sum_lt_1", 1}, {"sum_eq_1", 2}};

  for (const Region& region : regions) {
    int accepted = 0;
    int draws = 0;
    const int max_draws = 40 * cases + 100;
    while (accepted < cases && draws < max_draws) {
      ++draws;
      double alpha, beta;
      if (region.id == 0) {
        do {
          alpha = rng.uniform(0.55, 0.95);
          beta = rng.uniform(0.55, 0.95);
        } while (!(alpha + beta > 1.05));
      } else if (region.id == 1) {
        do {
          alpha = rng.uniform(0.1, 0.45);
          beta = rng.uniform(0.1, 0.45);
        } while (!(alpha + beta < 0.9));
      } else {
        alpha = rng.uniform(0.15, 0.85);
        beta = 1.0 - alpha;
      }
      const TrigPoly poly = TrigPoly::random(rng);
      const SampledFn f = poly.sample(g);
      const double tol = region.id == 2
                             ? 5e-3 * (1.0 + poly.sup_deriv(g)) * tol_scale
                             : 1e-4 * (1.0 + f.max_abs()) * tol_scale;

      const ExtremumReport rmin = check_sequential_min_bound(f, alpha, beta, tol);
      const ExtremumReport rmax = check_sequential_max_bound(f, alpha, beta, tol);
      if (!rmin.applicable || !rmax.applicable) continue;  // endpoint draw, resample
      out.push_back(from_extremum(rmin, "extremum-sequential-min", accepted));
      out.push_back(from_extremum(rmax, "extremum-sequential-max", accepted));
      ++accepted;
    }
    if (accepted < cases)
      throw std::runtime_error("extremum_battery: could not collect enough interior-extremum draws");
  }
  return out;
}

std::vector<VerificationReport> extremum_single_order_battery(int cases, int n,
                                                              std::uint64_t seed,
                                                              double tol_scale) {
  std::vector<VerificationReport> out;
  const Grid1D g = Grid1D::over(0.0, 1.0, n);
  Xoshiro256ss rng(seed);
  int accepted = 0;
  int draws = 0;
  while (accepted < cases && draws < 40 * cases + 100) {
    ++draws;
    const double alpha01 = rng.uniform(0.15, 0.85);
    const double alpha12 = rng.uniform(1.1, 1.9);
    const TrigPoly poly = TrigPoly::random(rng);
    const SampledFn f = poly.sample(g);
    const double tol = 1e-4 * (1.0 + f.max_abs()) * tol_scale;
    const double tol12 = 5e-3 * (1.0 + poly.sup_deriv(g)) * tol_scale;

    const ExtremumReport rc = check_caputo_max_bound(f, alpha01, tol);
    const ExtremumReport rr = check_rl_max_bound(f, alpha01, tol);
    const Order12Reports r12 = check_order12_min_bounds(f, alpha12, tol12);
    if (!rc.applicable || !rr.applicable || !r12.caputo.applicable) continue;
    out.push_back(from_extremum(rc, "extremum-caputo-max", accepted));
    out.push_back(from_extremum(rr, "extremum-rl-max", accepted));
    out.push_back(from_extremum(r12.caputo, "extremum-order12-caputo", accepted));
    out.push_back(from_extremum(r12.riemann_liouville, "extremum-order12-rl", accepted));
    ++accepted;
  }
  if (accepted < cases)
    throw std::runtime_error("extremum_single_order_battery: not enough interior-extremum draws");
  return out;
}

std::vector<VerificationReport> ode_sign_batch(int cases, int n, std::uint64_t seed,
                                               double tol_scale) {
  std::vector<VerificationReport> out;
  const Grid1D g = Grid1D::over(0.0, 1.0, n);
  Xoshiro256ss rng(seed);
  for (int c = 0; c < cases; ++c) {
    LinearSFODE p;
    p.grid = g;
    do {
      p.alpha = rng.uniform(0.55, 0.95);
      p.beta = rng.uniform(0.55, 0.95);
    } while (!(p.alpha + p.beta > 1.05));
    p.q = random_nonpos_smooth(g, rng, 0.2);
    p.f = random_nonneg_smooth(g, rng, 0.1);
    // The equation at x = a pins u(a) = f(a)/q(a) for solutions whose
    // sequential derivative is continuous up to the endpoint.
    p.u_a = p.f.values.front() / p.q.values.front();
    p.v_a = 0.0;

    const SampledFn u = solve_linear(p);
    const double tol = 1e-6 * (1.0 + p.f.max_abs()) * tol_scale;
    const double umax = u.max_value();
    VerificationReport r = VerificationReport::make("ode-sign", umax, kNaN, kNaN, 0.0, -umax, tol);
    tag(out, std::move(r), c);
  }
  return out;
}

std::vector<VerificationReport> ode_comparison_batch(int cases, int n, std::uint64_t seed,
                                                     double tol_scale) {
  std::vector<VerificationReport> out;
  const Grid1D g = Grid1D::over(0.0, 1.0, n);
  Xoshiro256ss rng(seed);
  for (int c = 0; c < cases; ++c) {
    LinearSFODE p1;
    p1.grid = g;
    do {
      p1.alpha = rng.uniform(0.55, 0.95);
      p1.beta = rng.uniform(0.55, 0.95);
    } while (!(p1.alpha + p1.beta > 1.05));
    p1.q = random_nonpos_smooth(g, rng, 0.1);
    p1.f = random_smooth(g, rng);
    p1.u_a = rng.uniform(-0.5, 0.0);
    LinearSFODE p2 = p1;
    const SampledFn bump = random_nonneg_smooth(g, rng, 0.0);
    for (std::size_t i = 0; i < p2.f.values.size(); ++i) p2.f.values[i] += bump.values[i];

    const double tol = 1e-6 * (1.0 + p2.f.max_abs()) * tol_scale;
    tag(out, compare_linear(p1, p2, tol), c);
  }
  return out;
}

std::vector<VerificationReport> ode_sandwich_batch(int cases, int n, std::uint64_t seed,
                                                   double tol_scale) {
  std::vector<VerificationReport> out;
  const Grid1D g = Grid1D::over(0.0, 1.0, n);
  Xoshiro256ss rng(seed);
  for (int c = 0; c < cases; ++c) {
    const double alpha = rng.uniform(0.55, 0.95);
    const double mu = rng.uniform(-1.5, -0.5);
    const double amp = rng.uniform(0.02, 0.2);
    const SampledFn gx = random_smooth(g, rng, 0.5);

    MultiTermSFODE p;
    p.grid = g;
    p.terms = {{1.0, alpha, alpha}};
    p.u_a = rng.uniform(-0.3, 0.3);

    SandwichSpec s;
    s.mu1 = mu;
    s.mu2 = mu;
    s.q1 = gx;
    for (double& v : s.q1.values) v += amp;
    s.q2 = gx;
    for (double& v : s.q2.values) v -= amp;
    s.F = [mu, amp, &gx, &g](double x, double u) {
      const int i = static_cast<int>(std::lround((x - g.a) / g.h));
      return mu * u + amp * std::sin(u) + gx.values[static_cast<std::size_t>(i)];
    };

    const double tol = 1e-6 * (1.0 + gx.max_abs()) * tol_scale;
    SandwichResult res = sandwich_check(s, p, tol);
    tag(out, std::move(res.report), c);
  }
  return out;
}

namespace {

// Deterministic nonnegative separable field with a positive floor.
std::function<double(double, double, double)> random_sep_field(Xoshiro256ss& rng,
                                                               const Grid1D& xg, const Grid1D& tg,
                                                               double floor_val, double sign) {
  const TrigPoly px = TrigPoly::random(rng, 3);
  const TrigPoly pt = TrigPoly::random(rng, 3);
  const double scale = rng.uniform(0.2, 0.8);
  const double xa = xg.a, xs = xg.b - xg.a, ta = tg.a, ts = tg.b - tg.a;
  return [=](double x, double t, double) {
    const double v = scale * px.eval((x - xa) / xs) * pt.eval((t - ta) / ts);
    return sign * (floor_val + v * v);
  };
}

// Boundary samples pinned to the initial slice at the corner: psi(0) = corner.
SampledFn boundary_from_corner(const Grid1D& tg, Xoshiro256ss& rng, double corner) {
  const TrigPoly p = TrigPoly::random(rng, 2);
  const double amp = rng.uniform(0.1, 0.5);
  return SampledFn::sample(
      tg, [&](double t) { return corner + amp * t * p.eval((t - tg.a) / (tg.b - tg.a)); },
      "psi");
}

double data_scale(const DiffusionProblem& p) {
  double m = std::max({p.phi.max_abs(), p.psi_a.max_abs(), p.psi_b.max_abs()});
  for (int k = 0; k <= p.tgrid.n; ++k)
    for (int i = 0; i <= p.xgrid.n; ++i)
      m = std::max(m, std::abs(p.F(p.xgrid.node(i), p.tgrid.node(k), 0.0)));
  return m;
}

}  // namespace

std::vector<VerificationReport> diffusion_principle_batch(int cases, int nx_nodes, int nt_nodes,
                                                          std::uint64_t seed, double tol_scale,
                                                          int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("diffusion_principle_batch: sign must be +1 or -1");
  std::vector<VerificationReport> out;
  const Grid1D xg = Grid1D::over(0.0, 1.0, nx_nodes - 1);
  const Grid1D tg = Grid1D::over(0.0, 1.0, nt_nodes - 1);
  Xoshiro256ss rng(seed);
  for (int c = 0; c < cases; ++c) {
    DiffusionProblem p;
    p.xgrid = xg;
    p.tgrid = tg;
    p.alpha = rng.uniform(0.3, 1.0);
    do {
      p.beta1 = rng.uniform(0.6, 1.0);
      p.beta2 = rng.uniform(0.6, 1.0);
    } while (!(p.beta1 + p.beta2 > 1.1));
    p.nu = rng.uniform(0.5, 2.0);
    p.F = random_sep_field(rng, xg, tg, 0.05, static_cast<double>(sign));
    p.phi = random_smooth(xg, rng, 0.7);
    p.psi_a = boundary_from_corner(tg, rng, p.phi.values.front());
    p.psi_b = boundary_from_corner(tg, rng, p.phi.values.back());

    const SolutionField u = solve_diffusion(p);
    const double tol = 1e-6 * (1.0 + data_scale(p)) * tol_scale;
    VerificationReport r = sign > 0 ? verify_parabolic_min_principle(u, p, tol)
                                    : verify_parabolic_max_principle(u, p, tol);
    tag(out, std::move(r), c);

    // Sign corollary: all-nonnegative (mirrored: all-nonpositive) data force
    // the matching sign of the solution.
    DiffusionProblem pc = p;
    pc.phi = random_nonneg_smooth(xg, rng, 0.0);
    if (sign < 0)
      for (double& v : pc.phi.values) v = -v;
    pc.psi_a = boundary_from_corner(tg, rng, pc.phi.values.front());
    pc.psi_b = boundary_from_corner(tg, rng, pc.phi.values.back());
    if (sign > 0) {
      for (double& v : pc.psi_a.values) v = std::abs(v);
      for (double& v : pc.psi_b.values) v = std::abs(v);
      pc.psi_a.values.front() = pc.phi.values.front();
      pc.psi_b.values.front() = pc.phi.values.back();
    } else {
      for (double& v : pc.psi_a.values) v = -std::abs(v);
      for (double& v : pc.psi_b.values) v = -std::abs(v);
      pc.psi_a.values.front() = pc.phi.values.front();
      pc.psi_b.values.front() = pc.phi.values.back();
    }
    const SolutionField uc = solve_diffusion(pc);
    const double tolc = 1e-6 * (1.0 + data_scale(pc)) * tol_scale;
    VerificationReport rc =
        sign > 0 ? VerificationReport::make("diffusion-corollary-nonnegative", uc.min_value(),
                                            kNaN, kNaN, 0.0, uc.min_value(), tolc)
                 : VerificationReport::make("diffusion-corollary-nonpositive", uc.max_value(),
                                            kNaN, kNaN, 0.0, -uc.max_value(), tolc);
    tag(out, std::move(rc), c);
  }
  return out;
}

std::vector<VerificationReport> diffusion_dependence_batch(int pairs, int nx_nodes, int nt_nodes,
                                                           std::uint64_t seed, double tol_scale) {
  std::vector<VerificationReport> out;
  const Grid1D xg = Grid1D::over(0.0, 1.0, nx_nodes - 1);
  const Grid1D tg = Grid1D::over(0.0, 1.0, nt_nodes - 1);
  Xoshiro256ss rng(seed);
  constexpr double pi = 3.14159265358979323846;
  for (int c = 0; c < pairs; ++c) {
    DiffusionProblem p;
    p.xgrid = xg;
    p.tgrid = tg;
    p.alpha = rng.uniform(0.3, 1.0);
    do {
      p.beta1 = rng.uniform(0.6, 1.0);
      p.beta2 = rng.uniform(0.6, 1.0);
    } while (!(p.beta1 + p.beta2 > 1.1));
    p.nu = rng.uniform(0.5, 2.0);
    p.F = [](double, double, double) { return 0.0; };
    const TrigPoly base = TrigPoly::random(rng, 3);
    p.phi = SampledFn::sample(
        xg, [&](double x) { return base.eval(x) * x * (1.0 - x); }, "phi");
    p.psi_a = SampledFn::zeros(tg);
    p.psi_b = SampledFn::zeros(tg);

    const double delta = rng.uniform(0.005, 0.1);
    const int k = 1 + static_cast<int>(rng.next() % 3);
    SampledFn phi_bar = p.phi;
    for (int i = 0; i <= xg.n; ++i)
      phi_bar.values[static_cast<std::size_t>(i)] += delta * std::sin(k * pi * xg.node(i));

    const double tol = 1e-6 * tol_scale;
    tag(out, continuous_dependence_experiment(p, phi_bar, tol), c);
  }
  return out;
}

std::vector<VerificationReport> diffusion_nonlinear_batch(int cases, int nx_nodes, int nt_nodes,
                                                          std::uint64_t seed, double tol_scale) {
  std::vector<VerificationReport> out;
  const Grid1D xg = Grid1D::over(0.0, 1.0, nx_nodes - 1);
  const Grid1D tg = Grid1D::over(0.0, 1.0, nt_nodes - 1);
  Xoshiro256ss rng(seed);
  constexpr double pi = 3.14159265358979323846;
  for (int c = 0; c < cases; ++c) {
    DiffusionProblem p;
    p.xgrid = xg;
    p.tgrid = tg;
    p.alpha = rng.uniform(0.3, 1.0);
    do {
      p.beta1 = rng.uniform(0.6, 1.0);
      p.beta2 = rng.uniform(0.6, 1.0);
    } while (!(p.beta1 + p.beta2 > 1.1));
    p.nu = rng.uniform(0.5, 2.0);
    p.nonlinear = true;
    const double cu = rng.uniform(0.2, 1.0);
    const TrigPoly gsrc = TrigPoly::random(rng, 2);
    p.F = [cu, gsrc](double x, double, double u) {
      return -cu * u - 0.3 * u * u * u + 0.3 * gsrc.eval(x);  // non-increasing in u
    };
    const TrigPoly base = TrigPoly::random(rng, 3);
    p.phi = SampledFn::sample(
        xg, [&](double x) { return base.eval(x) * x * (1.0 - x); }, "phi");
    p.psi_a = SampledFn::zeros(tg);
    p.psi_b = SampledFn::zeros(tg);

    const double delta = rng.uniform(0.01, 0.05);
    SampledFn g2 = p.phi;
    for (int i = 0; i <= xg.n; ++i)
      g2.values[static_cast<std::size_t>(i)] += delta * std::sin(pi * xg.node(i));

    const double tol = 1e-6 * tol_scale;
    for (auto& r : nonlinear_uniqueness_check(p, g2, tol)) tag(out, std::move(r), c);
  }
  return out;
}

std::vector<VerificationReport> pseudo_principles_batch(int cases, int nx_nodes, int nt_nodes,
                                                        std::uint64_t seed, double tol_scale) {
  std::vector<VerificationReport> out;
  const Grid1D xg = Grid1D::over(0.0, 1.0, nx_nodes - 1);
  const Grid1D tg = Grid1D::over(0.0, 1.0, nt_nodes - 1);
  Xoshiro256ss rng(seed);
  constexpr double pi = 3.14159265358979323846;
  for (int c = 0; c < cases; ++c) {
    const int sign = (c % 2 == 0) ? 1 : -1;
    PseudoParabolicProblem p;
    p.xgrid = xg;
    p.tgrid = tg;
    p.alpha = rng.uniform(0.3, 1.0);
    do {
      p.beta1 = rng.uniform(0.6, 1.0);
      p.beta2 = rng.uniform(0.6, 1.0);
    } while (!(p.beta1 + p.beta2 > 1.1));
    p.nu = rng.uniform(0.3, 1.0);
    p.F = random_sep_field(rng, xg, tg, 0.05, static_cast<double>(sign));
    p.phi = random_nonneg_smooth(xg, rng, 0.0);
    if (sign < 0)
      for (double& v : p.phi.values) v = -v;
    p.psi1 = boundary_from_corner(tg, rng, p.phi.values.front());
    p.psi2 = boundary_from_corner(tg, rng, p.phi.values.back());
    for (std::size_t i = 1; i < p.psi1.values.size(); ++i) {
      p.psi1.values[i] = sign * std::abs(p.psi1.values[i]);
      p.psi2.values[i] = sign * std::abs(p.psi2.values[i]);
    }

    double dscale = std::max({p.phi.max_abs(), p.psi1.max_abs(), p.psi2.max_abs()});
    for (int k = 0; k <= tg.n; ++k)
      for (int i = 0; i <= xg.n; ++i)
        dscale = std::max(dscale, std::abs(p.F(xg.node(i), tg.node(k), 0.0)));
    const double tol = 1e-6 * (1.0 + dscale) * tol_scale;

    const SolutionField u = solve_pseudo_parabolic(p);
    for (auto& r : verify_pseudo_principles(u, p, tol))
      if (r.applicable) tag(out, std::move(r), c);

    // delta-stability of the initial data.
    const double delta = rng.uniform(0.01, 0.05);
    SampledFn phi_bar = p.phi;
    for (int i = 0; i <= xg.n; ++i)
      phi_bar.values[static_cast<std::size_t>(i)] += delta * std::sin(pi * xg.node(i));
    tag(out, pseudo_continuous_dependence(p, phi_bar, 1e-6 * tol_scale), c);
  }
  return out;
}

std::vector<VerificationReport> elliptic_principles_batch(int cases, int dims, int n_nodes,
                                                          std::uint64_t seed, double tol_scale) {
  std::vector<VerificationReport> out;
  const Grid1D g0 = Grid1D::over(0.0, 1.0, n_nodes - 1);
  const Grid1D g1 = Grid1D::over(0.0, 1.0, n_nodes - 1);
  Xoshiro256ss rng(seed);

  auto smooth2 = [&](double amp) {
    const TrigPoly p0 = TrigPoly::random(rng, 2);
    const TrigPoly p1 = TrigPoly::random(rng, 2);
    return GridField::sample(dims, g0, g1, [=](double x, double y) {
      return amp * (p0.eval(x) + (dims == 2 ? p1.eval(y) : 0.0));
    });
  };
  auto nonneg2 = [&](double floor_val, double amp) {
    GridField f = smooth2(amp);
    for (double& v : f.v) v = floor_val + v * v;
    return f;
  };

  for (int c = 0; c < cases; ++c) {
    const bool max_form = (c % 2 == 0);  // alternate max/min principle regimes
    EllipticProblem p;
    p.dims = dims;
    p.grids[0] = g0;
    p.grids[1] = g1;
    do {
      p.alpha = rng.uniform(0.55, 0.95);
      p.beta = rng.uniform(0.55, 0.95);
    } while (!(p.alpha + p.beta > 1.05));
    p.gamma_ord = rng.uniform(0.2, 0.9);
    for (int ax = 0; ax < dims; ++ax) {
      p.a_coef[ax] = nonneg2(0.0, 0.6);
      GridField cfield = nonneg2(0.1, 0.5);
      if (max_form)
        for (double& v : cfield.v) v = -v;
      p.c_coef[ax] = cfield;
      p.b_coef[ax] = smooth2(0.5);
    }
    GridField d = nonneg2(0.0, 0.5);
    for (double& v : d.v) v = -v;
    p.d_coef = d;
    GridField F = nonneg2(0.05, 0.6);
    if (!max_form)
      for (double& v : F.v) v = -v;
    p.F = F;
    p.boundary_phi = smooth2(0.5);

    const EllipticSolution sol = solve_elliptic(p);
    double dscale = std::max(std::abs(p.F.min_value()), std::abs(p.F.max_value()));
    dscale = std::max({dscale, std::abs(p.boundary_phi.min_value()),
                       std::abs(p.boundary_phi.max_value())});
    const double tol = 1e-6 * (1.0 + dscale) * tol_scale;
    for (auto& r : verify_weak_principles(sol.u, p, tol))
      if (r.applicable) tag(out, std::move(r), c);
  }

  {  // Strong principle: homogeneous equation, zero boundary => u = 0.
    EllipticProblem p;
    p.dims = dims;
    p.grids[0] = g0;
    p.grids[1] = g1;
    p.alpha = 0.8;
    p.beta = 0.7;
    p.gamma_ord = 0.5;
    for (int ax = 0; ax < dims; ++ax) {
      p.a_coef[ax] = GridField::constant(dims, g0, g1, 1.0);
      p.b_coef[ax] = GridField::constant(dims, g0, g1, 0.3);
      p.c_coef[ax] = GridField::constant(dims, g0, g1, -1.0);
    }
    p.d_coef = GridField::constant(dims, g0, g1, -0.5);
    p.F = GridField::constant(dims, g0, g1, 0.0);
    p.boundary_phi = GridField::constant(dims, g0, g1, 0.0);
    const EllipticSolution sol = solve_elliptic(p);
    const double norm = std::max(std::abs(sol.u.min_value()), std::abs(sol.u.max_value()));
    VerificationReport r = VerificationReport::make("elliptic-strong-principle", norm, kNaN, kNaN,
                                                    0.0, -norm, 1e-10 * tol_scale);
    r.note = "homogeneous zero-boundary solve";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> cylinder_batch(int cases, int nx_nodes, int ny_nodes,
                                               std::uint64_t seed, double tol_scale) {
  std::vector<VerificationReport> out;
  const Grid1D xg = Grid1D::over(0.0, 1.0, nx_nodes - 1);
  const Grid1D yg = Grid1D::over(-1.0, 1.0, ny_nodes - 1);
  Xoshiro256ss rng(seed);
  for (int c = 0; c < cases; ++c) {
    const int sign = (c % 2 == 0) ? 1 : -1;
    CylinderProblem p;
    p.xgrid = xg;
    p.ygrid = yg;
    do {
      p.alpha = rng.uniform(0.55, 0.95);
      p.beta = rng.uniform(0.55, 0.95);
    } while (!(p.alpha + p.beta > 1.05));
    p.lap = FracLaplacianSpec::make(rng.uniform(0.15, 0.85));

    const TrigPoly fx = TrigPoly::random(rng, 2);
    const TrigPoly fy = TrigPoly::random(rng, 2);
    const double amp = rng.uniform(0.2, 0.8);
    p.f = GridField::sample(2, xg, yg, [&](double x, double y) {
      const double v = fx.eval(x) + fy.eval((y - yg.a) / (yg.b - yg.a));
      return sign * (0.05 + amp * v * v);
    });
    const TrigPoly py1 = TrigPoly::random(rng, 2);
    const TrigPoly py2 = TrigPoly::random(rng, 2);
    p.phi1 = SampledFn::sample(yg, [&](double y) {
      const double xi = (y - yg.a) / (yg.b - yg.a);
      return sign * 0.5 * py1.eval(xi) * py1.eval(xi) * xi * (1.0 - xi);
    });
    p.phi2 = SampledFn::sample(yg, [&](double y) {
      const double xi = (y - yg.a) / (yg.b - yg.a);
      return sign * 0.5 * py2.eval(xi) * py2.eval(xi) * xi * (1.0 - xi);
    });

    const EllipticSolution sol = solve_cylinder(p);
    double dscale = std::max({p.phi1.max_abs(), p.phi2.max_abs(),
                              std::abs(p.f.min_value()), std::abs(p.f.max_value())});
    const double tol = 1e-6 * (1.0 + dscale) * tol_scale;
    for (auto& r : verify_cylinder_principles(sol.u, p, tol))
      if (r.applicable) tag(out, std::move(r), c);
  }
  return out;
}

}  // namespace fracmax
