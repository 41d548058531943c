#include "fracmax/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <sstream>

#include "fracmax/batches.hpp"
#include "fracmax/elliptic.hpp"
#include "fracmax/extremum.hpp"
#include "fracmax/fode.hpp"
#include "fracmax/fpde.hpp"
#include "fracmax/fracops.hpp"
#include "fracmax/io.hpp"

namespace fracmax {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SampledFn sampled_from_spec(const Scenario& sc, const std::string& key, const Grid1D& g,
                            const std::string& fallback = "zero") {
  const std::string spec = sc.get(key, fallback);
  return SampledFn::sample(g, parse_function_spec(spec, g.a, g.b), key);
}

struct RunContext {
  const Scenario& sc;
  const RunOptions& opt;
  std::string out_dir;
  RunSummary* summary;

  double tol_scale() const {
    return opt.tol_scale * sc.get_double("checks.tol_scale", 1.0);
  }
  std::uint64_t seed() const { return opt.has_seed_override ? opt.seed_override : sc.seed; }

  std::string artifact(const std::string& name) const {
    return (std::filesystem::path(out_dir) / name).string();
  }
  void record(const std::string& path) { summary->artifact_paths.push_back(path); }
};

void run_op(RunContext& ctx) {
  const std::string input = ctx.sc.get("op.input");
  if (input.empty()) throw ScenarioError({"kind 'op' requires key 'op.input'"});
  const std::string opname = ctx.sc.get("op.operator");
  const SampledFn f = read_sampled_csv(input);
  const double alpha = ctx.sc.get_double("orders.alpha", 0.5);

  SampledFn result;
  if (opname == "rl_integral") {
    result = rl_integral(f, alpha);
  } else if (opname == "caputo") {
    result = caputo(f, alpha);
  } else if (opname == "rl_derivative") {
    result = rl_derivative(f, alpha);
  } else if (opname == "sequential_caputo") {
    result = sequential_caputo(f, alpha, ctx.sc.get_double("orders.beta", alpha));
  } else if (opname == "caputo_order12") {
    result = caputo_order12(f, alpha);
  } else if (opname == "regional_frac_laplacian") {
    result = regional_frac_laplacian(f, FracLaplacianSpec::make(ctx.sc.get_double("orders.delta", 0.5)));
  } else {
    throw ScenarioError({"key 'op.operator': unknown operator '" + opname + "'"});
  }
  const std::string out = ctx.sc.get("op.output").empty() ? ctx.artifact("op_result.csv")
                                                          : ctx.sc.get("op.output");
  // The RL derivative carries its NaN sentinel at the first node into the CSV.
  write_sampled_csv(result, out);
  ctx.record(out);
}

void run_extremum(RunContext& ctx) {
  const int cases = ctx.sc.get_int("batch.cases", 0);
  const int nx_nodes = ctx.sc.get_int("grid.nx", 2049);
  const int n = nx_nodes - 1;
  if (cases > 0) {
    auto reports = extremum_battery(cases, n, ctx.seed(), ctx.tol_scale());
    auto more = extremum_single_order_battery(std::max(1, cases / 4), n, ctx.seed() + 1,
                                              ctx.tol_scale());
    reports.insert(reports.end(), more.begin(), more.end());
    ctx.summary->reports = std::move(reports);
    return;
  }
  const Grid1D g = Grid1D::over(0.0, 1.0, n);
  const SampledFn f = sampled_from_spec(ctx.sc, "problem.f", g, "sin:1:1");
  const std::string kind = ctx.sc.get("problem.kind", "min");
  const double alpha = ctx.sc.get_double("orders.alpha", 0.75);
  const double beta = ctx.sc.get_double("orders.beta", 0.75);
  const double tol = 1e-4 * (1.0 + f.max_abs()) * ctx.tol_scale();

  auto to_report = [](const ExtremumReport& e, const char* principle) {
    VerificationReport r = VerificationReport::make(principle, e.lhs, e.x_star, kNaN, e.rhs,
                                                    e.margin, e.tolerance);
    r.applicable = e.applicable;
    r.note = e.note;
    return r;
  };
  if (kind == "min") {
    ctx.summary->reports.push_back(
        to_report(check_sequential_min_bound(f, alpha, beta, tol), "extremum-sequential-min"));
  } else if (kind == "max") {
    ctx.summary->reports.push_back(
        to_report(check_sequential_max_bound(f, alpha, beta, tol), "extremum-sequential-max"));
  } else if (kind == "caputo_max") {
    ctx.summary->reports.push_back(
        to_report(check_caputo_max_bound(f, alpha, tol), "extremum-caputo-max"));
  } else if (kind == "rl_max") {
    ctx.summary->reports.push_back(to_report(check_rl_max_bound(f, alpha, tol), "extremum-rl-max"));
  } else if (kind == "order12") {
    const Order12Reports r = check_order12_min_bounds(f, alpha, tol);
    ctx.summary->reports.push_back(to_report(r.caputo, "extremum-order12-caputo"));
    ctx.summary->reports.push_back(to_report(r.riemann_liouville, "extremum-order12-rl"));
  } else {
    throw ScenarioError({"key 'problem.kind': unknown extremum check '" + kind + "'"});
  }
}

void run_ode(RunContext& ctx) {
  const int cases = ctx.sc.get_int("batch.cases", 0);
  const int nx_nodes = ctx.sc.get_int("grid.nx", 1025);
  const int n = nx_nodes - 1;
  if (cases > 0) {
    const std::string theorem = ctx.sc.get("batch.theorem", "sign");
    if (theorem == "sign")
      ctx.summary->reports = ode_sign_batch(cases, n, ctx.seed(), ctx.tol_scale());
    else if (theorem == "comparison")
      ctx.summary->reports = ode_comparison_batch(cases, n, ctx.seed(), ctx.tol_scale());
    else if (theorem == "sandwich")
      ctx.summary->reports = ode_sandwich_batch(cases, n, ctx.seed(), ctx.tol_scale());
    else
      throw ScenarioError({"key 'batch.theorem': unknown ODE battery '" + theorem + "'"});
    return;
  }

  LinearSFODE p;
  p.grid = Grid1D::over(ctx.sc.get_double("grid.a", 0.0), ctx.sc.get_double("grid.b", 1.0), n);
  p.alpha = ctx.sc.get_double("orders.alpha", 0.75);
  p.beta = ctx.sc.get_double("orders.beta", 0.75);
  p.q = sampled_from_spec(ctx.sc, "problem.q", p.grid, "const:-1");
  p.f = sampled_from_spec(ctx.sc, "problem.f", p.grid, "zero");
  p.v_a = ctx.sc.get_double("problem.v_a", 0.0);
  if (ctx.sc.get_bool("problem.class_consistent_ua", false)) {
    if (p.q.values.front() == 0.0)
      throw ScenarioError({"class-consistent u(a) needs q(a) != 0"});
    p.u_a = p.f.values.front() / p.q.values.front();
  } else {
    p.u_a = ctx.sc.get_double("problem.u_a", 0.0);
  }

  const SampledFn u = solve_linear(p);
  const std::string out = ctx.artifact("ode_solution.csv");
  write_sampled_csv(u, out);
  ctx.record(out);

  // Sign check applies when the comparison-theorem hypotheses hold.
  const bool hyp = p.q.max_value() <= 0.0 && p.q.values.front() != 0.0 && p.f.min_value() >= 0.0 &&
                   p.u_a <= 0.0;
  const double tol = 1e-6 * (1.0 + p.f.max_abs()) * ctx.tol_scale();
  VerificationReport r = VerificationReport::make("ode-sign", u.max_value(), kNaN, kNaN, 0.0,
                                                  -u.max_value(), tol);
  if (!hyp) {
    r.applicable = false;
    r.note = "hypotheses not met (q <= 0, q(a) != 0, f >= 0, u(a) <= 0) - informational only";
  }
  ctx.summary->reports.push_back(std::move(r));
}

void write_field_artifacts(RunContext& ctx, const SolutionField& u, const std::string& stem) {
  const std::string csv = ctx.artifact(stem + ".csv");
  const std::string bin = ctx.artifact(stem + ".bin");
  write_field_csv(u, csv);
  write_field_binary(u, bin);
  ctx.record(csv);
  ctx.record(bin);
}

void run_diffusion(RunContext& ctx) {
  const int cases = ctx.sc.get_int("batch.cases", 0);
  const int nx = ctx.sc.get_int("grid.nx", 128);
  const int nt = ctx.sc.get_int("grid.nt", 128);
  if (cases > 0) {
    const std::string theorem = ctx.sc.get("batch.theorem", "min_principle");
    if (theorem == "min_principle")
      ctx.summary->reports = diffusion_principle_batch(cases, nx, nt, ctx.seed(), ctx.tol_scale(), +1);
    else if (theorem == "max_principle")
      ctx.summary->reports = diffusion_principle_batch(cases, nx, nt, ctx.seed(), ctx.tol_scale(), -1);
    else if (theorem == "continuous_dependence")
      ctx.summary->reports = diffusion_dependence_batch(cases, nx, nt, ctx.seed(), ctx.tol_scale());
    else if (theorem == "nonlinear")
      ctx.summary->reports = diffusion_nonlinear_batch(cases, nx, nt, ctx.seed(), ctx.tol_scale());
    else
      throw ScenarioError({"key 'batch.theorem': unknown diffusion battery '" + theorem + "'"});
    return;
  }

  DiffusionProblem p;
  p.xgrid = Grid1D::over(ctx.sc.get_double("grid.a", 0.0), ctx.sc.get_double("grid.b", 1.0), nx - 1);
  p.tgrid = Grid1D::over(0.0, ctx.sc.get_double("grid.T", 1.0), nt - 1);
  p.alpha = ctx.sc.get_double("orders.alpha", 0.5);
  p.beta1 = ctx.sc.get_double("orders.beta1", 0.9);
  p.beta2 = ctx.sc.get_double("orders.beta2", 0.9);
  p.nu = ctx.sc.get_double("problem.nu", 1.0);
  auto fx = parse_function_spec(ctx.sc.get("problem.F", "zero"), p.xgrid.a, p.xgrid.b);
  p.F = [fx](double x, double, double) { return fx(x); };
  p.phi = sampled_from_spec(ctx.sc, "problem.phi", p.xgrid);
  p.psi_a = sampled_from_spec(ctx.sc, "problem.psi_a", p.tgrid);
  p.psi_b = sampled_from_spec(ctx.sc, "problem.psi_b", p.tgrid);

  const SolutionField u = solve_diffusion(p);
  write_field_artifacts(ctx, u, "diffusion");

  double dmax = std::max({p.phi.max_abs(), p.psi_a.max_abs(), p.psi_b.max_abs()});
  for (int i = 0; i <= p.xgrid.n; ++i) dmax = std::max(dmax, std::abs(fx(p.xgrid.node(i))));
  const double tol = 1e-6 * (1.0 + dmax) * ctx.tol_scale();
  if (ctx.sc.get_bool("checks.min_principle", true))
    ctx.summary->reports.push_back(verify_parabolic_min_principle(u, p, tol));
  if (ctx.sc.get_bool("checks.max_principle", true))
    ctx.summary->reports.push_back(verify_parabolic_max_principle(u, p, tol));
}

void run_pseudo(RunContext& ctx) {
  const int cases = ctx.sc.get_int("batch.cases", 0);
  const int nx = ctx.sc.get_int("grid.nx", 128);
  const int nt = ctx.sc.get_int("grid.nt", 128);
  if (cases > 0) {
    ctx.summary->reports = pseudo_principles_batch(cases, nx, nt, ctx.seed(), ctx.tol_scale());
    return;
  }
  PseudoParabolicProblem p;
  p.xgrid = Grid1D::over(ctx.sc.get_double("grid.a", 0.0), ctx.sc.get_double("grid.b", 1.0), nx - 1);
  p.tgrid = Grid1D::over(0.0, ctx.sc.get_double("grid.T", 1.0), nt - 1);
  p.alpha = ctx.sc.get_double("orders.alpha", 0.5);
  p.beta1 = ctx.sc.get_double("orders.beta1", 0.9);
  p.beta2 = ctx.sc.get_double("orders.beta2", 0.9);
  p.nu = ctx.sc.get_double("problem.nu", 1.0);
  auto fx = parse_function_spec(ctx.sc.get("problem.F", "zero"), p.xgrid.a, p.xgrid.b);
  p.F = [fx](double x, double, double) { return fx(x); };
  p.phi = sampled_from_spec(ctx.sc, "problem.phi", p.xgrid);
  p.psi1 = sampled_from_spec(ctx.sc, "problem.psi1", p.tgrid);
  p.psi2 = sampled_from_spec(ctx.sc, "problem.psi2", p.tgrid);

  const SolutionField u = solve_pseudo_parabolic(p);
  write_field_artifacts(ctx, u, "pseudo");

  double dmax = std::max({p.phi.max_abs(), p.psi1.max_abs(), p.psi2.max_abs()});
  for (int i = 0; i <= p.xgrid.n; ++i) dmax = std::max(dmax, std::abs(fx(p.xgrid.node(i))));
  const double tol = 1e-6 * (1.0 + dmax) * ctx.tol_scale();
  for (auto& r : verify_pseudo_principles(u, p, tol)) ctx.summary->reports.push_back(std::move(r));
}

void run_elliptic(RunContext& ctx) {
  const int cases = ctx.sc.get_int("batch.cases", 0);
  const int dims = ctx.sc.get_int("grid.dims", 1);
  const int n0 = ctx.sc.get_int("grid.n0", dims == 1 ? 257 : 33);
  if (cases > 0) {
    ctx.summary->reports = elliptic_principles_batch(cases, dims, n0, ctx.seed(), ctx.tol_scale());
    return;
  }

  EllipticProblem p;
  p.dims = dims;
  p.grids[0] = Grid1D::over(ctx.sc.get_double("grid.a0", 0.0), ctx.sc.get_double("grid.b0", 1.0), n0 - 1);
  const int n1 = ctx.sc.get_int("grid.n1", 33);
  p.grids[1] = dims == 2 ? Grid1D::over(ctx.sc.get_double("grid.a1", 0.0),
                                        ctx.sc.get_double("grid.b1", 1.0), n1 - 1)
                         : p.grids[0];
  p.alpha = ctx.sc.get_double("orders.alpha", 0.75);
  p.beta = ctx.sc.get_double("orders.beta", 0.75);
  p.gamma_ord = ctx.sc.get_double("orders.gamma", 0.5);

  auto field_from = [&](const std::string& key, const std::string& fallback) {
    auto f0 = parse_function_spec(ctx.sc.get(key, fallback), p.grids[0].a, p.grids[0].b);
    return GridField::sample(dims, p.grids[0], p.grids[1],
                             [f0](double x, double) { return f0(x); });
  };
  p.a_coef[0] = field_from("problem.a0", "const:1");
  p.a_coef[1] = field_from("problem.a1", "const:1");
  p.b_coef[0] = field_from("problem.b0", "zero");
  p.b_coef[1] = field_from("problem.b1", "zero");
  p.c_coef[0] = field_from("problem.c0", "const:-1");
  p.c_coef[1] = field_from("problem.c1", "const:-1");
  p.d_coef = field_from("problem.d", "zero");
  p.F = field_from("problem.F", "zero");
  p.boundary_phi = field_from("problem.phi", "zero");

  const EllipticSolution sol = solve_elliptic(p);
  const SolutionField as_field = field_as_solution(sol.u);
  write_field_artifacts(ctx, as_field, "elliptic");

  double dscale = std::max(std::abs(p.F.min_value()), std::abs(p.F.max_value()));
  const double tol = 1e-6 * (1.0 + dscale) * ctx.tol_scale();
  for (auto& r : verify_weak_principles(sol.u, p, tol))
    ctx.summary->reports.push_back(std::move(r));
}

void run_laplace(RunContext& ctx) {
  const int cases = ctx.sc.get_int("batch.cases", 0);
  const int nx = ctx.sc.get_int("grid.nx", 33);
  const int ny = ctx.sc.get_int("grid.ny", 33);
  if (cases > 0) {
    ctx.summary->reports = cylinder_batch(cases, nx, ny, ctx.seed(), ctx.tol_scale());
    return;
  }

  CylinderProblem p;
  p.xgrid = Grid1D::over(ctx.sc.get_double("grid.a", 0.0), ctx.sc.get_double("grid.b", 1.0), nx - 1);
  p.ygrid = Grid1D::over(ctx.sc.get_double("grid.y_lo", -1.0), ctx.sc.get_double("grid.y_hi", 1.0),
                         ny - 1);
  p.alpha = ctx.sc.get_double("orders.alpha", 0.75);
  p.beta = ctx.sc.get_double("orders.beta", 0.75);
  p.lap = FracLaplacianSpec::make(ctx.sc.get_double("orders.delta", 0.5));
  auto fy = parse_function_spec(ctx.sc.get("problem.f", "const:1"), p.ygrid.a, p.ygrid.b);
  p.f = GridField::sample(2, p.xgrid, p.ygrid, [fy](double, double y) { return fy(y); });
  p.phi1 = sampled_from_spec(ctx.sc, "problem.phi1", p.ygrid);
  p.phi2 = sampled_from_spec(ctx.sc, "problem.phi2", p.ygrid);

  const EllipticSolution sol = solve_cylinder(p);
  write_field_artifacts(ctx, field_as_solution(sol.u), "laplace");

  double dscale = std::max({p.phi1.max_abs(), p.phi2.max_abs(),
                            std::abs(p.f.min_value()), std::abs(p.f.max_value())});
  const double tol = 1e-6 * (1.0 + dscale) * ctx.tol_scale();
  for (auto& r : verify_cylinder_principles(sol.u, p, tol))
    ctx.summary->reports.push_back(std::move(r));
}

}  // namespace

int RunSummary::exit_code() const {
  for (const auto& r : reports)
    if (r.applicable && !r.pass) return 1;
  return 0;
}

nlohmann::ordered_json RunSummary::to_json() const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario_id;
  j["checks_total"] = reports.size();
  int applicable = 0, failed = 0, informational = 0;
  for (const auto& r : reports) {
    if (!r.applicable)
      ++informational;
    else {
      ++applicable;
      if (!r.pass) ++failed;
    }
  }
  j["checks_applicable"] = applicable;
  j["checks_failed"] = failed;
  j["checks_informational"] = informational;
  j["exit_code"] = exit_code();
  j["artifacts"] = artifact_paths;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  j["reports"] = arr;
  return j;
}

std::string resolve_output_dir(const Scenario& scenario, const RunOptions& options) {
  if (!options.output_dir.empty()) return options.output_dir;
  if (!scenario.output_dir.empty()) return scenario.output_dir;
  if (const char* env = std::getenv("FRACMAX_OUT"); env && *env) return env;
  return "fracmax_out";
}

RunSummary run(const Scenario& scenario, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunSummary summary;
  summary.scenario_id = scenario.get("scenario.label",
                                     scenario.source_path.empty() ? scenario.kind
                                                                  : scenario.source_path);

  RunContext ctx{scenario, options, resolve_output_dir(scenario, options), &summary};
  std::filesystem::create_directories(ctx.out_dir);

  if (scenario.kind == "op")
    run_op(ctx);
  else if (scenario.kind == "extremum")
    run_extremum(ctx);
  else if (scenario.kind == "ode")
    run_ode(ctx);
  else if (scenario.kind == "diffusion")
    run_diffusion(ctx);
  else if (scenario.kind == "pseudo")
    run_pseudo(ctx);
  else if (scenario.kind == "elliptic")
    run_elliptic(ctx);
  else if (scenario.kind == "laplace")
    run_laplace(ctx);
  else
    throw ScenarioError({"unknown scenario kind '" + scenario.kind + "'"});

  // One JSON line per report, then the summary last (artifact list complete).
  {
    std::ostringstream os;
    for (const auto& r : summary.reports) os << r.to_json().dump() << '\n';
    const std::string path = ctx.artifact("reports.jsonl");
    atomic_write(path, os.str());
    ctx.record(path);
  }
  {
    const std::string path = ctx.artifact("summary.json");
    atomic_write(path, summary.to_json().dump(2) + "\n");
  }
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace fracmax
