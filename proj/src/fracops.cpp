#include "fracmax/fracops.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fracmax/specfun.hpp"

namespace fracmax {

namespace {

// b_j = (j+1)^{1-alpha} - j^{1-alpha}, evaluated in a cancellation-free form
// for large j.
std::vector<double> l1_b_weights(int count, double alpha) {
  const double e = 1.0 - alpha;
  std::vector<double> b(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    if (j == 0) {
      b[0] = 1.0;
    } else {
      const double dj = static_cast<double>(j);
      b[static_cast<std::size_t>(j)] = std::pow(dj, e) * std::expm1(e * std::log1p(1.0 / dj));
    }
  }
  return b;
}

// Shared L1 loop; order in (0,1], order 1 is the backward difference.
void l1_apply(const std::vector<double>& f, double h, double alpha, std::vector<double>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  const double c = std::pow(h, -alpha) / gamma_fn(2.0 - alpha);
  const std::vector<double> b = l1_b_weights(n, alpha);
  out.assign(f.size(), 0.0);
  for (int i = 1; i <= n; ++i) {
    double s = 0.0;
    for (int k = 0; k < i; ++k) s += b[static_cast<std::size_t>(i - 1 - k)] * (f[static_cast<std::size_t>(k + 1)] - f[static_cast<std::size_t>(k)]);
    out[static_cast<std::size_t>(i)] = c * s;
  }
}

void require_order_open01(double alpha, const char* who) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    std::ostringstream os;
    os << who << ": order must lie in (0,1), got " << alpha;
    throw std::domain_error(os.str());
  }
}

void require_order_halfopen01(double alpha, const char* who) {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) {
    std::ostringstream os;
    os << who << ": order must lie in (0,1], got " << alpha;
    throw std::domain_error(os.str());
  }
}

}  // namespace

SampledFn rl_integral(const SampledFn& f, double alpha) {
  f.validate();
  require_order_halfopen01(alpha, "rl_integral");
  const int n = f.grid.n;
  const double h = f.grid.h;
  const double scale = std::pow(h, alpha) / gamma_fn(alpha);

  // Per-cell moments of the kernel (t_i - s)^{alpha-1} against the linear
  // interpolant, in units of h^alpha:
  //   mu0(m) = (m^a - (m-1)^a)/a,  mu1(m) = (m^{a+1} - (m-1)^{a+1})/(a+1),
  // cell at distance m contributes f_k (mu1 - (m-1) mu0) + f_{k+1} (m mu0 - mu1).
  std::vector<double> wk(static_cast<std::size_t>(n + 1), 0.0);   // weight on the near node f_k
  std::vector<double> wk1(static_cast<std::size_t>(n + 1), 0.0);  // weight on the far node f_{k+1}
  for (int m = 1; m <= n; ++m) {
    const double dm = static_cast<double>(m);
    const double mu0 = (std::pow(dm, alpha) - std::pow(dm - 1.0, alpha)) / alpha;
    const double mu1 = (std::pow(dm, alpha + 1.0) - std::pow(dm - 1.0, alpha + 1.0)) / (alpha + 1.0);
    wk[static_cast<std::size_t>(m)] = mu1 - (dm - 1.0) * mu0;
    wk1[static_cast<std::size_t>(m)] = dm * mu0 - mu1;
  }

  SampledFn out;
  out.grid = f.grid;
  out.label = f.label;
  out.values.assign(f.values.size(), 0.0);
  for (int i = 1; i <= n; ++i) {
    double s = 0.0;
    for (int k = 0; k < i; ++k) {
      const int m = i - k;
      s += f.values[static_cast<std::size_t>(k)] * wk[static_cast<std::size_t>(m)] +
           f.values[static_cast<std::size_t>(k + 1)] * wk1[static_cast<std::size_t>(m)];
    }
    out.values[static_cast<std::size_t>(i)] = scale * s;
  }
  return out;
}

SampledFn caputo(const SampledFn& f, double alpha) {
  f.validate();
  require_order_open01(alpha, "caputo");
  SampledFn out;
  out.grid = f.grid;
  out.label = f.label;
  l1_apply(f.values, f.grid.h, alpha, out.values);
  return out;
}

SampledFn rl_derivative(const SampledFn& f, double alpha) {
  require_order_open01(alpha, "rl_derivative");
  SampledFn out = caputo(f, alpha);
  const double f_a = f.values.front();
  const double g1 = gamma_fn(1.0 - alpha);
  for (int i = 1; i <= f.grid.n; ++i) {
    const double t = static_cast<double>(i) * f.grid.h;
    out.values[static_cast<std::size_t>(i)] += f_a * std::pow(t, -alpha) / g1;
  }
  out.values[0] = std::numeric_limits<double>::quiet_NaN();  // kernel singular at t = a
  return out;
}

SampledFn sequential_caputo(const SampledFn& f, double alpha, double beta) {
  f.validate();
  require_order_halfopen01(alpha, "sequential_caputo (outer)");
  require_order_halfopen01(beta, "sequential_caputo (inner)");
  SampledFn inner;
  inner.grid = f.grid;
  l1_apply(f.values, f.grid.h, beta, inner.values);
  SampledFn out;
  out.grid = f.grid;
  out.label = f.label;
  l1_apply(inner.values, f.grid.h, alpha, out.values);
  return out;
}

SampledFn caputo_order12(const SampledFn& f, double alpha) {
  f.validate();
  if (!(alpha > 1.0) || !(alpha < 2.0))
    throw std::domain_error("caputo_order12: order must lie in (1,2)");
  const int n = f.grid.n;
  if (n < 3) throw std::invalid_argument("caputo_order12: needs at least 3 intervals");
  const double h = f.grid.h;
  const double h2 = h * h;
  SampledFn second;
  second.grid = f.grid;
  second.values.resize(f.values.size());
  auto& d2 = second.values;
  const auto& v = f.values;
  for (int i = 1; i < n; ++i)
    d2[static_cast<std::size_t>(i)] =
        (v[static_cast<std::size_t>(i + 1)] - 2.0 * v[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i - 1)]) / h2;
  // One-sided second-order ends.
  d2[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / h2;
  d2[static_cast<std::size_t>(n)] = (2.0 * v[static_cast<std::size_t>(n)] - 5.0 * v[static_cast<std::size_t>(n - 1)] +
                                     4.0 * v[static_cast<std::size_t>(n - 2)] - v[static_cast<std::size_t>(n - 3)]) / h2;
  return rl_integral(second, 2.0 - alpha);
}

FracLaplacianSpec FracLaplacianSpec::make(double delta) {
  if (!(delta > 0.0) || !(delta < 1.0))
    throw std::domain_error("FracLaplacianSpec: delta must lie in (0,1)");
  FracLaplacianSpec s;
  s.delta = delta;
  s.dim = 1;
  const double n_dim = 1.0;
  s.c_norm = delta * std::pow(2.0, 2.0 * delta) * gamma_fn((n_dim + 2.0 * delta) / 2.0) /
             (std::pow(3.14159265358979323846, n_dim / 2.0) * gamma_fn(1.0 - delta));
  return s;
}

FracLaplacianSpec FracLaplacianSpec::with_c_norm(double delta, double c_norm) {
  FracLaplacianSpec s = make(delta);
  const double rel = std::abs(c_norm - s.c_norm) / std::max(1.0, std::abs(s.c_norm));
  if (rel > 1e-10) {
    std::ostringstream os;
    os << "FracLaplacianSpec: supplied c_norm " << c_norm << " disagrees with the normalizing "
       << "constant " << s.c_norm << " for delta = " << delta;
    throw std::invalid_argument(os.str());
  }
  return s;
}

namespace {

struct LaplacianAccumulator {
  // Accumulates weight w on the difference (u_i - u_j); used both for the
  // node-wise application (bit-exact zero on constants) and for the matrix.
  virtual void add(int i, int j, double w) = 0;
  virtual ~LaplacianAccumulator() = default;
};

void regional_laplacian_weights(const Grid1D& g, const FracLaplacianSpec& spec,
                                LaplacianAccumulator& acc) {
  const int n = g.n;
  const double h = g.h;
  const double d = spec.delta;
  const double two_d = 2.0 * d;

  // Kernel moments over a cell at distance [m h, (m+1) h]:
  //   P0(m) = int r^{-1-2d} dr = (m^{-2d} - (m+1)^{-2d}) h^{-2d} / (2d)
  //   P1(m) = int r^{-2d}  dr = ((m+1)^{1-2d} - m^{1-2d}) h^{1-2d} / (1-2d)
  //           (log form at d = 1/2)
  std::vector<double> p0(static_cast<std::size_t>(n), 0.0), p1(static_cast<std::size_t>(n), 0.0);
  for (int m = 1; m < n; ++m) {
    const double dm = static_cast<double>(m);
    p0[static_cast<std::size_t>(m)] =
        (std::pow(dm, -two_d) - std::pow(dm + 1.0, -two_d)) * std::pow(h, -two_d) / two_d;
    if (d == 0.5)
      p1[static_cast<std::size_t>(m)] = std::log((dm + 1.0) / dm);
    else
      p1[static_cast<std::size_t>(m)] =
          (std::pow(dm + 1.0, 1.0 - two_d) - std::pow(dm, 1.0 - two_d)) * std::pow(h, 1.0 - two_d) /
          (1.0 - two_d);
  }

  // Finite-part value of int_0^h r^{-2d} dr for the one-sided boundary cell.
  const double fp_adjacent = (d == 0.5) ? std::log(h) : std::pow(h, 1.0 - two_d) / (1.0 - two_d);
  // Curvature factor of the interior singular pair: int_0^h r^{1-2d} dr.
  const double pair_curv = std::pow(h, 2.0 - two_d) / (2.0 - two_d);

  for (int i = 0; i <= n; ++i) {
    // Cells fully to the right: [y_{i+m}, y_{i+m+1}], m >= 1.
    for (int m = 1; i + m + 1 <= n; ++m) {
      const double q1 = (p1[static_cast<std::size_t>(m)] - static_cast<double>(m) * h * p0[static_cast<std::size_t>(m)]) / h;
      const double q0 = p0[static_cast<std::size_t>(m)] - q1;
      acc.add(i, i + m, q0);
      acc.add(i, i + m + 1, q1);
    }
    // Cells fully to the left: [y_{i-m-1}, y_{i-m}], m >= 1.
    for (int m = 1; i - m - 1 >= 0; ++m) {
      const double q1 = (p1[static_cast<std::size_t>(m)] - static_cast<double>(m) * h * p0[static_cast<std::size_t>(m)]) / h;
      const double q0 = p0[static_cast<std::size_t>(m)] - q1;
      acc.add(i, i - m, q0);
      acc.add(i, i - m - 1, q1);
    }
    // Singular cells adjacent to node i.
    if (i >= 1 && i <= n - 1) {
      // Fold the pair: the odd slope part cancels in the principal value, the
      // even part is the curvature -q with q h^2 = (u_{i+1}-u_i)+(u_{i-1}-u_i):
      //   contribution = (pair_curv / h^2) ((u_i-u_{i+1}) + (u_i-u_{i-1})).
      const double w = pair_curv / (h * h);
      acc.add(i, i + 1, w);
      acc.add(i, i - 1, w);
    } else if (i == 0) {
      // One-sided cell [y_0, y_1]: finite part of the linear interpolant,
      //   -s int_0^h r^{-2d} dr with s = (u_1 - u_0)/h.
      acc.add(0, 1, fp_adjacent / h);
    } else {  // i == n
      acc.add(n, n - 1, fp_adjacent / h);
    }
  }
}

}  // namespace

SampledFn regional_frac_laplacian(const SampledFn& f, const FracLaplacianSpec& spec) {
  f.validate();
  FracLaplacianSpec checked = FracLaplacianSpec::with_c_norm(spec.delta, spec.c_norm);
  if (spec.dim != 1) throw std::domain_error("regional_frac_laplacian: only dim = 1 is supported");

  struct Apply final : LaplacianAccumulator {
    const std::vector<double>* u = nullptr;
    std::vector<double>* out = nullptr;
    void add(int i, int j, double w) override {
      (*out)[static_cast<std::size_t>(i)] +=
          w * ((*u)[static_cast<std::size_t>(i)] - (*u)[static_cast<std::size_t>(j)]);
    }
  } apply;

  SampledFn out;
  out.grid = f.grid;
  out.label = f.label;
  out.values.assign(f.values.size(), 0.0);
  apply.u = &f.values;
  apply.out = &out.values;
  regional_laplacian_weights(f.grid, checked, apply);
  for (double& v : out.values) v *= checked.c_norm;
  return out;
}

DenseMatrix caputo_l1_matrix(const Grid1D& g, double alpha) {
  require_order_halfopen01(alpha, "caputo_l1_matrix");
  const int n = g.n;
  const double c = std::pow(g.h, -alpha) / gamma_fn(2.0 - alpha);
  const std::vector<double> b = l1_b_weights(n, alpha);
  DenseMatrix w(n + 1, n + 1);
  for (int i = 1; i <= n; ++i) {
    // (W f)_i = c sum_k b_{i-1-k} (f_{k+1} - f_k)
    for (int k = 0; k < i; ++k) {
      const double bw = c * b[static_cast<std::size_t>(i - 1 - k)];
      w.at(i, k + 1) += bw;
      w.at(i, k) -= bw;
    }
  }
  return w;
}

DenseMatrix sequential_caputo_matrix(const Grid1D& g, double alpha, double beta) {
  return matmul(caputo_l1_matrix(g, alpha), caputo_l1_matrix(g, beta));
}

DenseMatrix regional_laplacian_matrix(const Grid1D& g, const FracLaplacianSpec& spec) {
  FracLaplacianSpec checked = FracLaplacianSpec::with_c_norm(spec.delta, spec.c_norm);

  struct Fill final : LaplacianAccumulator {
    DenseMatrix* m = nullptr;
    void add(int i, int j, double w) override {
      m->at(i, i) += w;
      m->at(i, j) -= w;
    }
  } fill;

  DenseMatrix m(g.n + 1, g.n + 1);
  fill.m = &m;
  regional_laplacian_weights(g, checked, fill);
  for (double& v : m.data) v *= checked.c_norm;
  return m;
}

}  // namespace fracmax
