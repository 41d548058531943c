#include "fracmax/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracmax {

Grid1D Grid1D::over(double a, double b, int n) {
  if (!(a < b)) throw std::invalid_argument("Grid1D: requires a < b");
  if (n < 2) throw std::invalid_argument("Grid1D: requires n >= 2 intervals");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("Grid1D: endpoints must be finite");
  Grid1D g;
  g.a = a;
  g.b = b;
  g.n = n;
  g.h = (b - a) / static_cast<double>(n);
  return g;
}

SampledFn SampledFn::sample(const Grid1D& g, const std::function<double(double)>& f,
                            std::string label) {
  SampledFn s;
  s.grid = g;
  s.label = std::move(label);
  s.values.resize(static_cast<std::size_t>(g.node_count()));
  for (int i = 0; i <= g.n; ++i) s.values[static_cast<std::size_t>(i)] = f(g.node(i));
  s.validate();
  return s;
}

SampledFn SampledFn::constant(const Grid1D& g, double c, std::string label) {
  SampledFn s;
  s.grid = g;
  s.label = std::move(label);
  s.values.assign(static_cast<std::size_t>(g.node_count()), c);
  s.validate();
  return s;
}

SampledFn SampledFn::zeros(const Grid1D& g, std::string label) {
  return constant(g, 0.0, std::move(label));
}

void SampledFn::validate(bool allow_nan) const {
  if (values.size() != static_cast<std::size_t>(grid.node_count()))
    throw std::invalid_argument("SampledFn: value count does not match grid nodes");
  for (double v : values) {
    if (std::isnan(v)) {
      if (allow_nan) continue;
      throw std::invalid_argument("SampledFn: NaN value in samples");
    }
    if (!std::isfinite(v)) throw std::invalid_argument("SampledFn: non-finite value in samples");
  }
}

double SampledFn::max_abs() const {
  double m = 0.0;
  for (double v : values)
    if (std::isfinite(v)) m = std::max(m, std::abs(v));
  return m;
}

double SampledFn::min_value() const {
  double m = values.front();
  for (double v : values) m = std::min(m, v);
  return m;
}

double SampledFn::max_value() const {
  double m = values.front();
  for (double v : values) m = std::max(m, v);
  return m;
}

}  // namespace fracmax
