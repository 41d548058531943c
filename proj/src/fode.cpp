#include "fracmax/fode.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fracmax/specfun.hpp"

namespace fracmax {

namespace {

void require_order(double v, const char* who) {
  if (!(v > 0.0) || !(v <= 1.0)) {
    std::ostringstream os;
    os << who << ": order must lie in (0,1], got " << v;
    throw std::domain_error(os.str());
  }
}

std::vector<double> l1_b(int count, double order) {
  const double e = 1.0 - order;
  std::vector<double> b(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    if (j == 0)
      b[0] = 1.0;
    else {
      const double dj = static_cast<double>(j);
      b[static_cast<std::size_t>(j)] = std::pow(dj, e) * std::expm1(e * std::log1p(1.0 / dj));
    }
  }
  return b;
}

// History part of the L1 value at node i: (L1 w)_i = c w_i + history(w_0..w_{i-1}).
double l1_history(const std::vector<double>& w, const std::vector<double>& b, double c, int i) {
  double s = -w[static_cast<std::size_t>(i - 1)];  // b_0 (w_i - w_{i-1}) contributes -w_{i-1}
  for (int k = 0; k + 1 < i; ++k)
    s += b[static_cast<std::size_t>(i - 1 - k)] *
         (w[static_cast<std::size_t>(k + 1)] - w[static_cast<std::size_t>(k)]);
  return c * s;
}

}  // namespace

SampledFn solve_linear(const LinearSFODE& p) {
  require_order(p.alpha, "solve_linear (alpha)");
  require_order(p.beta, "solve_linear (beta)");
  p.q.validate();
  p.f.validate();
  if (!(p.q.grid == p.grid) || !(p.f.grid == p.grid))
    throw std::invalid_argument("solve_linear: q and f must share the problem grid");

  const int n = p.grid.n;
  const double h = p.grid.h;
  const double ca = std::pow(h, -p.alpha) / gamma_fn(2.0 - p.alpha);
  const double cb = std::pow(h, -p.beta) / gamma_fn(2.0 - p.beta);
  const std::vector<double> ba = l1_b(n, p.alpha);
  const std::vector<double> bb = l1_b(n, p.beta);

  std::vector<double> u(static_cast<std::size_t>(n + 1)), v(static_cast<std::size_t>(n + 1));
  u[0] = p.u_a;
  v[0] = p.v_a;
  for (int i = 1; i <= n; ++i) {
    const double hb = l1_history(u, bb, cb, i);
    const double ha = l1_history(v, ba, ca, i);
    const double denom = p.q.values[static_cast<std::size_t>(i)] + ca * cb;
    if (std::abs(denom) < 1e-300) {
      std::ostringstream os;
      os << "solve_linear: singular local system at node " << i;
      throw std::runtime_error(os.str());
    }
    const double ui = (p.f.values[static_cast<std::size_t>(i)] - ha - ca * hb) / denom;
    const double vi = cb * ui + hb;
    if (!std::isfinite(ui) || !std::isfinite(vi)) {
      std::ostringstream os;
      os << "solve_linear: divergence at node " << i;
      throw std::runtime_error(os.str());
    }
    u[static_cast<std::size_t>(i)] = ui;
    v[static_cast<std::size_t>(i)] = vi;
  }

  SampledFn out;
  out.grid = p.grid;
  out.values = std::move(u);
  out.label = "u";
  return out;
}

VerificationReport compare_linear(const LinearSFODE& p1, const LinearSFODE& p2, double tol) {
  if (!(p1.grid == p2.grid) || p1.alpha != p2.alpha || p1.beta != p2.beta ||
      p1.u_a != p2.u_a || p1.v_a != p2.v_a)
    throw std::invalid_argument("compare_linear: problems must agree except for the forcing");
  for (std::size_t i = 0; i < p1.q.values.size(); ++i)
    if (p1.q.values[i] != p2.q.values[i])
      throw std::invalid_argument("compare_linear: coefficient q differs between problems");
  for (std::size_t i = 0; i < p1.f.values.size(); ++i)
    if (!(p1.f.values[i] <= p2.f.values[i]))
      throw std::invalid_argument("compare_linear: requires f1 <= f2 node-wise");

  const SampledFn u1 = solve_linear(p1);
  const SampledFn u2 = solve_linear(p2);
  double worst = std::numeric_limits<double>::infinity();
  std::size_t at = 0;
  for (std::size_t i = 0; i < u1.values.size(); ++i) {
    const double m = u2.values[i] - u1.values[i];
    if (m < worst) {
      worst = m;
      at = i;
    }
  }
  VerificationReport r = VerificationReport::make(
      "ode-comparison", u1.values[at], p1.grid.node(static_cast<int>(at)),
      std::numeric_limits<double>::quiet_NaN(), u2.values[at], worst, tol);
  r.note = "min over nodes of u2 - u1";
  return r;
}

SampledFn solve_multiterm(const MultiTermSFODE& p, const SampledFn& initial_guess) {
  if (p.terms.empty()) throw std::invalid_argument("solve_multiterm: at least one term required");
  double lambda_sum = 0.0;
  for (const auto& t : p.terms) {
    if (!(t.lambda >= 0.0)) throw std::domain_error("solve_multiterm: lambda_j must be >= 0");
    require_order(t.alpha, "solve_multiterm (alpha_j)");
    require_order(t.beta, "solve_multiterm (beta_j)");
    const double s = t.alpha + t.beta;
    if (!(s > 1.0) || !(s <= 2.0))
      throw std::domain_error("solve_multiterm: requires 1 < alpha_j + beta_j <= 2");
    lambda_sum += t.lambda;
  }
  if (!(lambda_sum > 0.0)) throw std::domain_error("solve_multiterm: all lambda_j are zero");
  if (!p.F) throw std::invalid_argument("solve_multiterm: F not set");
  initial_guess.validate();
  if (!(initial_guess.grid == p.grid))
    throw std::invalid_argument("solve_multiterm: initial guess must live on the problem grid");

  const int n = p.grid.n;
  const double h = p.grid.h;
  const std::size_t m = p.terms.size();

  std::vector<double> ca(m), cb(m);
  std::vector<std::vector<double>> ba(m), bb(m);
  double diag = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    ca[j] = std::pow(h, -p.terms[j].alpha) / gamma_fn(2.0 - p.terms[j].alpha);
    cb[j] = std::pow(h, -p.terms[j].beta) / gamma_fn(2.0 - p.terms[j].beta);
    ba[j] = l1_b(n, p.terms[j].alpha);
    bb[j] = l1_b(n, p.terms[j].beta);
    diag += p.terms[j].lambda * ca[j] * cb[j];
  }

  std::vector<double> u_prev = initial_guess.values;
  std::vector<double> u(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<double>> v(m, std::vector<double>(static_cast<std::size_t>(n + 1), 0.0));

  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < p.picard_max; ++iter) {
    u[0] = p.u_a;
    for (std::size_t j = 0; j < m; ++j) v[j][0] = 0.0;
    for (int i = 1; i <= n; ++i) {
      double hist = 0.0;
      std::vector<double> hb(m);
      for (std::size_t j = 0; j < m; ++j) {
        hb[j] = l1_history(u, bb[j], cb[j], i);
        const double haj = l1_history(v[j], ba[j], ca[j], i);
        hist += p.terms[j].lambda * (ca[j] * hb[j] + haj);
      }
      const double rhs = -p.F(p.grid.node(i), u_prev[static_cast<std::size_t>(i)]);
      const double ui = (rhs - hist) / diag;
      if (!std::isfinite(ui)) {
        std::ostringstream os;
        os << "solve_multiterm: divergence at node " << i << " (iteration " << iter << ")";
        throw std::runtime_error(os.str());
      }
      u[static_cast<std::size_t>(i)] = ui;
      for (std::size_t j = 0; j < m; ++j) v[j][static_cast<std::size_t>(i)] = cb[j] * ui + hb[j];
    }
    residual = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
      residual = std::max(residual, std::abs(u[i] - u_prev[i]));
    u_prev = u;
    if (residual < p.picard_tol) {
      SampledFn out;
      out.grid = p.grid;
      out.values = std::move(u_prev);
      out.label = "u";
      return out;
    }
  }
  std::ostringstream os;
  os << "solve_multiterm: Picard did not converge in " << p.picard_max
     << " iterations (last residual " << residual << ")";
  throw std::runtime_error(os.str());
}

SandwichResult sandwich_check(const SandwichSpec& s, const MultiTermSFODE& p, double tol) {
  if (p.terms.size() != 1 || p.terms.front().alpha != p.terms.front().beta)
    throw std::invalid_argument("sandwich_check: needs a single term with alpha = beta");
  if (!(s.mu1 < 0.0) || !(s.mu2 < 0.0))
    throw std::invalid_argument("sandwich_check: requires mu1 < 0 and mu2 < 0");
  s.q1.validate();
  s.q2.validate();
  if (!(s.q1.grid == p.grid) || !(s.q2.grid == p.grid))
    throw std::invalid_argument("sandwich_check: q1, q2 must live on the problem grid");

  MultiTermSFODE nonlinear = p;
  nonlinear.F = s.F;
  const SampledFn u = solve_multiterm(nonlinear, SampledFn::constant(p.grid, p.u_a));

  // Envelope contract sampled over the solution range widened by one unit.
  const double lo = u.min_value() - 1.0;
  const double hi = u.max_value() + 1.0;
  constexpr int kLattice = 101;
  for (int i = 0; i <= p.grid.n; ++i) {
    const double x = p.grid.node(i);
    for (int k = 0; k < kLattice; ++k) {
      const double uu = lo + (hi - lo) * static_cast<double>(k) / (kLattice - 1);
      const double fv = s.F(x, uu);
      const double up = s.mu1 * uu + s.q1.values[static_cast<std::size_t>(i)];
      const double dn = s.mu2 * uu + s.q2.values[static_cast<std::size_t>(i)];
      if (fv > up + 1e-12 || fv < dn - 1e-12) {
        std::ostringstream os;
        os << "sandwich_check: envelope contract violated at (x = " << x << ", u = " << uu
           << "): F = " << fv << ", bounds [" << dn << ", " << up << "]";
        throw std::invalid_argument(os.str());
      }
    }
  }

  const double a_ord = p.terms.front().alpha;
  auto envelope = [&](double mu, const SampledFn& q_env) {
    LinearSFODE lin;
    lin.grid = p.grid;
    lin.alpha = a_ord;
    lin.beta = a_ord;
    lin.q = SampledFn::constant(p.grid, mu);
    lin.f = q_env;
    for (double& x : lin.f.values) x = -x;  // D^a D^a w + mu w = -q_env
    lin.u_a = p.u_a;
    lin.v_a = 0.0;
    return solve_linear(lin);
  };
  // For solutions marched from shared initial data, the upper envelope of F
  // produces the lower bounding solution and vice versa: subtracting the
  // envelope equation from D^a D^a u = -F(x,u) gives
  //   D^a D^a (u - w1) + mu1 (u - w1) >= 0  => u >= w1,
  //   D^a D^a (u - w2) + mu2 (u - w2) <= 0  => u <= w2.
  SandwichResult res;
  res.u_lower = envelope(s.mu1, s.q1);
  res.u_upper = envelope(s.mu2, s.q2);
  res.u = u;

  double worst = std::numeric_limits<double>::infinity();
  std::size_t at = 0;
  bool low_side = true;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    const double m_lo = u.values[i] - res.u_lower.values[i];
    const double m_hi = res.u_upper.values[i] - u.values[i];
    if (m_lo < worst) {
      worst = m_lo;
      at = i;
      low_side = true;
    }
    if (m_hi < worst) {
      worst = m_hi;
      at = i;
      low_side = false;
    }
  }
  res.report = VerificationReport::make(
      "ode-sandwich", u.values[at], p.grid.node(static_cast<int>(at)),
      std::numeric_limits<double>::quiet_NaN(),
      low_side ? res.u_lower.values[at] : res.u_upper.values[at], worst, tol);
  res.report.note = low_side ? "tightest at the lower envelope" : "tightest at the upper envelope";
  return res;
}

}  // namespace fracmax
