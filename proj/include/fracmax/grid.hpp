#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fracmax {

/// Uniform grid of n intervals (n+1 nodes) on [a,b].
struct Grid1D {
  double a = 0.0;
  double b = 1.0;
  int n = 2;
  double h = 0.5;

  static Grid1D over(double a, double b, int n);

  double node(int i) const { return a + static_cast<double>(i) * h; }
  int node_count() const { return n + 1; }
  bool operator==(const Grid1D& other) const = default;
};

/// Real-valued samples of a function at the nodes of a Grid1D.
struct SampledFn {
  Grid1D grid;
  std::vector<double> values;
  std::string label;

  static SampledFn sample(const Grid1D& g, const std::function<double(double)>& f,
                          std::string label = {});
  static SampledFn constant(const Grid1D& g, double c, std::string label = {});
  static SampledFn zeros(const Grid1D& g, std::string label = {});

  /// Throws if the length does not match the grid or a value is non-finite.
  /// NaN sentinels produced by operators are tolerated when allow_nan is set.
  void validate(bool allow_nan = false) const;

  double max_abs() const;
  double min_value() const;
  double max_value() const;
};

}  // namespace fracmax
