#pragma once

#include <string>

#include <json.hpp>

#include "fracmax/elliptic.hpp"
#include "fracmax/fpde.hpp"
#include "fracmax/grid.hpp"

namespace fracmax {

/// Formats a double with 17 significant digits (round-trip exact, locale-free).
std::string fmt_double(double v);

/// All writers go through a temp-file + rename so readers never observe a
/// partial file.
void atomic_write(const std::string& path, const std::string& content);

// Sampled-function CSV: header "t,value", one row per node, strictly
// increasing t.
void write_sampled_csv(const SampledFn& f, const std::string& path);
SampledFn read_sampled_csv(const std::string& path);

// Space-time field CSV: header "t,x,u", time-major rows.
void write_field_csv(const SolutionField& u, const std::string& path);

// Compact binary layout: magic "FRMXFLD1", two uint32 node counts (time axis,
// space axis), four float64 grid endpoints (t0, t1, x0, x1), then the
// time-major float64 values. Little-endian.
void write_field_binary(const SolutionField& u, const std::string& path);
SolutionField read_field_binary(const std::string& path);

// Gnuplot-compatible triplets "t x u", blank line between time blocks, plus a
// sidecar metadata JSON next to the file (path + ".meta.json").
void write_plot_data(const SolutionField& u, const std::string& path,
                     const nlohmann::ordered_json& meta);

// 2-D elliptic fields reuse the same layouts with axis0 in the t column.
SolutionField field_as_solution(const GridField& f);

}  // namespace fracmax
