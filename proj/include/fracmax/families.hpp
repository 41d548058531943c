#pragma once

#include <cmath>
#include <vector>

#include "fracmax/grid.hpp"
#include "fracmax/rng.hpp"

namespace fracmax {

/// Trigonometric polynomial  f(x) = sum_{k=1..K} a_k sin(k pi x) + b_k cos(k pi x)
/// on [0,1]; the batch verifiers draw coefficients uniformly from [-1,1].
struct TrigPoly {
  std::vector<double> a;  // sine coefficients, k = 1..K
  std::vector<double> b;  // cosine coefficients

  static TrigPoly random(Xoshiro256ss& rng, int kmax = 5) {
    TrigPoly p;
    p.a.resize(static_cast<std::size_t>(kmax));
    p.b.resize(static_cast<std::size_t>(kmax));
    for (int k = 0; k < kmax; ++k) {
      p.a[static_cast<std::size_t>(k)] = rng.uniform(-1.0, 1.0);
      p.b[static_cast<std::size_t>(k)] = rng.uniform(-1.0, 1.0);
    }
    return p;
  }

  double eval(double x) const {
    constexpr double pi = 3.14159265358979323846;
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double w = static_cast<double>(k + 1) * pi;
      s += a[k] * std::sin(w * x) + b[k] * std::cos(w * x);
    }
    return s;
  }

  double deriv(double x) const {
    constexpr double pi = 3.14159265358979323846;
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double w = static_cast<double>(k + 1) * pi;
      s += w * (a[k] * std::cos(w * x) - b[k] * std::sin(w * x));
    }
    return s;
  }

  SampledFn sample(const Grid1D& g) const {
    return SampledFn::sample(g, [this](double x) { return eval(x); }, "trig-poly");
  }

  double sup_deriv(const Grid1D& g) const {
    double m = 0.0;
    for (int i = 0; i <= g.n; ++i) m = std::max(m, std::abs(deriv(g.node(i))));
    return m;
  }
};

/// Smooth nonnegative sample with a positive floor: floor + s(x)^2 for a
/// random trig polynomial s.
inline SampledFn random_nonneg_smooth(const Grid1D& g, Xoshiro256ss& rng, double floor_val,
                                      int kmax = 3) {
  const TrigPoly s = TrigPoly::random(rng, kmax);
  const double scale = rng.uniform(0.2, 1.0);
  return SampledFn::sample(
      g,
      [&](double x) {
        const double xi = (x - g.a) / (g.b - g.a);
        const double v = s.eval(xi) * scale;
        return floor_val + v * v;
      },
      "nonneg-smooth");
}

/// Smooth nonpositive sample bounded away from zero: -(floor + s(x)^2).
inline SampledFn random_nonpos_smooth(const Grid1D& g, Xoshiro256ss& rng, double floor_val,
                                      int kmax = 3) {
  SampledFn f = random_nonneg_smooth(g, rng, floor_val, kmax);
  for (double& v : f.values) v = -v;
  f.label = "nonpos-smooth";
  return f;
}

/// Smooth sample of either sign.
inline SampledFn random_smooth(const Grid1D& g, Xoshiro256ss& rng, double amp = 1.0,
                               int kmax = 4) {
  const TrigPoly s = TrigPoly::random(rng, kmax);
  return SampledFn::sample(
      g, [&](double x) { return amp * s.eval((x - g.a) / (g.b - g.a)); }, "smooth");
}

}  // namespace fracmax
