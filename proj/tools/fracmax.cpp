// fracmax: fractional-operator toolbox and principle-verification runner.
//
// Subcommands: op, verify, solve-ode, solve-diffusion, solve-pseudo,
// solve-elliptic, solve-laplace, plot-data. Exit codes: 0 all applicable
// checks passed, 1 a check failed, 2 usage or validation error.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracmax/io.hpp"
#include "fracmax/runner.hpp"
#include "fracmax/scenario.hpp"

namespace {

struct GlobalFlags {
  std::string scenario_path;
  std::string out_dir;
  double tol_scale = 1.0;
  bool quiet = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, GlobalFlags& g) {
  cmd->add_option("--scenario", g.scenario_path, "Scenario file (flat sectioned key = value)");
  cmd->add_option("--out", g.out_dir, "Output directory (overrides scenario and FRACMAX_OUT)");
  cmd->add_option("--tol-scale", g.tol_scale, "Multiplier applied to every check tolerance");
  cmd->add_flag("--quiet", g.quiet, "Suppress per-report console lines");
  cmd->add_option("--seed", g.seed, "Seed override for randomized batteries")
      ->each([&g](const std::string&) { g.seed_set = true; });
}

int run_scenario_command(const GlobalFlags& g, const std::string& expected_kind,
                         const std::string& default_kind_config) {
  fracmax::Scenario sc;
  if (!g.scenario_path.empty()) {
    sc = fracmax::parse_scenario(g.scenario_path);
  } else if (!default_kind_config.empty()) {
    sc = fracmax::parse_scenario_text(default_kind_config, "<builtin>");
  } else {
    std::fprintf(stderr, "error: --scenario is required for this subcommand\n");
    return 2;
  }
  if (!expected_kind.empty() && sc.kind != expected_kind) {
    std::fprintf(stderr, "error: scenario kind '%s' does not match the subcommand ('%s')\n",
                 sc.kind.c_str(), expected_kind.c_str());
    return 2;
  }

  fracmax::RunOptions opt;
  opt.output_dir = g.out_dir;
  opt.tol_scale = g.tol_scale;
  opt.quiet = g.quiet;
  opt.has_seed_override = g.seed_set;
  opt.seed_override = g.seed;

  const fracmax::RunSummary summary = fracmax::run(sc, opt);
  if (!g.quiet) {
    for (const auto& r : summary.reports) std::printf("%s\n", r.to_json().dump().c_str());
    std::fprintf(stderr, "scenario '%s': %zu checks, exit %d (%.3f s)\n",
                 summary.scenario_id.c_str(), summary.reports.size(), summary.exit_code(),
                 summary.wall_seconds);
  }
  return summary.exit_code();
}

std::string builtin_verify_scenario(const std::string& kind) {
  // Default batteries for `fracmax verify <kind>` without a scenario file.
  if (kind == "extremum")
    return "[scenario]\nkind = extremum\n[batch]\ncases = 25\n[grid]\nnx = 1025\n";
  if (kind == "ode") return "[scenario]\nkind = ode\n[batch]\ncases = 10\ntheorem = sign\n";
  if (kind == "diffusion")
    return "[scenario]\nkind = diffusion\n[batch]\ncases = 5\ntheorem = min_principle\n"
           "[grid]\nnx = 65\nnt = 65\n";
  if (kind == "pseudo")
    return "[scenario]\nkind = pseudo\n[batch]\ncases = 4\n[grid]\nnx = 65\nnt = 65\n";
  if (kind == "elliptic")
    return "[scenario]\nkind = elliptic\n[batch]\ncases = 6\n[grid]\ndims = 1\nn0 = 129\n";
  if (kind == "laplace")
    return "[scenario]\nkind = laplace\n[batch]\ncases = 4\n[grid]\nnx = 25\nny = 25\n";
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracmax: fractional operators, solvers and principle verification"};
  app.require_subcommand(1);

  GlobalFlags g;
  std::string verify_kind;
  std::string plot_input, plot_output;

  CLI::App* op = app.add_subcommand("op", "Apply a fractional operator to a sampled CSV");
  add_common(op, g);
  CLI::App* verify = app.add_subcommand("verify", "Run a verification battery");
  verify->add_option("kind", verify_kind, "Battery kind when no scenario file is given");
  add_common(verify, g);
  CLI::App* s_ode = app.add_subcommand("solve-ode", "Solve a linear sequential ODE");
  add_common(s_ode, g);
  CLI::App* s_diff = app.add_subcommand("solve-diffusion", "Solve the time-space diffusion problem");
  add_common(s_diff, g);
  CLI::App* s_pseudo = app.add_subcommand("solve-pseudo", "Solve the pseudo-parabolic problem");
  add_common(s_pseudo, g);
  CLI::App* s_ell = app.add_subcommand("solve-elliptic", "Solve the fractional elliptic problem");
  add_common(s_ell, g);
  CLI::App* s_lap = app.add_subcommand("solve-laplace", "Solve the cylinder Laplace problem");
  add_common(s_lap, g);
  CLI::App* plot = app.add_subcommand("plot-data", "Emit gnuplot triplets from a field binary");
  plot->add_option("--input", plot_input, "Field binary produced by a solve")->required();
  plot->add_option("--output", plot_output, "Plot data path")->required();
  add_common(plot, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (op->parsed()) return run_scenario_command(g, "op", {});
    if (verify->parsed()) {
      if (!g.scenario_path.empty()) return run_scenario_command(g, {}, {});
      const std::string builtin = builtin_verify_scenario(verify_kind);
      if (builtin.empty()) {
        std::fprintf(stderr, "error: verify needs --scenario or a known kind (got '%s')\n",
                     verify_kind.c_str());
        return 2;
      }
      return run_scenario_command(g, {}, builtin);
    }
    if (s_ode->parsed()) return run_scenario_command(g, "ode", {});
    if (s_diff->parsed()) return run_scenario_command(g, "diffusion", {});
    if (s_pseudo->parsed()) return run_scenario_command(g, "pseudo", {});
    if (s_ell->parsed()) return run_scenario_command(g, "elliptic", {});
    if (s_lap->parsed()) return run_scenario_command(g, "laplace", {});
    if (plot->parsed()) {
      const fracmax::SolutionField u = fracmax::read_field_binary(plot_input);
      nlohmann::ordered_json meta;
      meta["source"] = plot_input;
      meta["scheme"] = u.scheme_meta.empty() ? "field" : u.scheme_meta;
      meta["t_nodes"] = u.tgrid.n + 1;
      meta["x_nodes"] = u.xgrid.n + 1;
      meta["t_range"] = {u.tgrid.a, u.tgrid.b};
      meta["x_range"] = {u.xgrid.a, u.xgrid.b};
      fracmax::write_plot_data(u, plot_output, meta);
      if (!g.quiet) std::fprintf(stderr, "wrote %s\n", plot_output.c_str());
      return 0;
    }
  } catch (const fracmax::ScenarioError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
