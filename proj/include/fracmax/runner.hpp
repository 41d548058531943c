#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fracmax/report.hpp"
#include "fracmax/scenario.hpp"

namespace fracmax {

struct RunSummary {
  std::string scenario_id;
  std::vector<VerificationReport> reports;
  std::vector<std::string> artifact_paths;
  double wall_seconds = 0.0;  // console only; never serialized (reruns must be byte-identical)

  /// 0 when every applicable check passed, 1 otherwise.
  int exit_code() const;
  nlohmann::ordered_json to_json() const;
};

struct RunOptions {
  std::string output_dir;  // overrides scenario/out; empty = scenario, env, ./fracmax_out
  double tol_scale = 1.0;
  bool quiet = false;
  bool has_seed_override = false;
  std::uint64_t seed_override = 0;
};

/// Dispatches the scenario to its owning module, writes the solution CSV and
/// binary artifacts, one JSON line per report (reports.jsonl) and summary.json.
RunSummary run(const Scenario& scenario, const RunOptions& options);

std::string resolve_output_dir(const Scenario& scenario, const RunOptions& options);

}  // namespace fracmax
