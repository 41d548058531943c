#include "fracmax/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fracmax/linalg.hpp"
#include "fracmax/specfun.hpp"

namespace fracmax {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

GridField GridField::sample(int dims, const Grid1D& g0, const Grid1D& g1,
                            const std::function<double(double, double)>& f) {
  GridField out;
  out.dims = dims;
  out.g0 = g0;
  out.g1 = g1;
  if (dims == 1) {
    out.v.resize(static_cast<std::size_t>(g0.node_count()));
    for (int i = 0; i <= g0.n; ++i) out.v[static_cast<std::size_t>(i)] = f(g0.node(i), 0.0);
  } else if (dims == 2) {
    out.v.resize(static_cast<std::size_t>(g0.node_count()) * g1.node_count());
    for (int i = 0; i <= g0.n; ++i)
      for (int j = 0; j <= g1.n; ++j) out.at(i, j) = f(g0.node(i), g1.node(j));
  } else {
    throw std::invalid_argument("GridField: dims must be 1 or 2");
  }
  return out;
}

GridField GridField::constant(int dims, const Grid1D& g0, const Grid1D& g1, double c) {
  return sample(dims, g0, g1, [c](double, double) { return c; });
}

double GridField::min_value() const {
  double m = v.front();
  for (double x : v) m = std::min(m, x);
  return m;
}

double GridField::max_value() const {
  double m = v.front();
  for (double x : v) m = std::max(m, x);
  return m;
}

namespace {

void validate_elliptic(const EllipticProblem& p) {
  if (p.dims != 1 && p.dims != 2)
    throw std::invalid_argument("solve_elliptic: dims must be 1 or 2 (higher dims unsupported)");
  if (!(p.alpha > 0.0) || !(p.alpha <= 1.0) || !(p.beta > 0.0) || !(p.beta <= 1.0))
    throw std::domain_error("solve_elliptic: alpha, beta must lie in (0,1]");
  const double s = p.alpha + p.beta;
  if (!(s > 1.0) || !(s <= 2.0))
    throw std::domain_error("solve_elliptic: requires 1 < alpha + beta <= 2");
  if (!(p.gamma_ord > 0.0) || !(p.gamma_ord <= 1.0))
    throw std::domain_error("solve_elliptic: gamma must lie in (0,1]");
}

struct Indexer {
  int dims;
  int n0, n1;
  int interior_count() const { return dims == 1 ? n0 - 1 : (n0 - 1) * (n1 - 1); }
  bool interior(int i, int j) const {
    if (i <= 0 || i >= n0) return false;
    if (dims == 2 && (j <= 0 || j >= n1)) return false;
    return true;
  }
  int index(int i, int j) const {
    return dims == 1 ? i - 1 : (i - 1) * (n1 - 1) + (j - 1);
  }
};

}  // namespace

EllipticSolution solve_elliptic(const EllipticProblem& p) {
  validate_elliptic(p);
  const Indexer ix{p.dims, p.grids[0].n, p.dims == 2 ? p.grids[1].n : 0};
  const int nunk = ix.interior_count();

  // Per-axis fractional operator rows.
  DenseMatrix wseq[2], wgam[2];
  for (int ax = 0; ax < p.dims; ++ax) {
    wseq[ax] = sequential_caputo_matrix(p.grids[ax], p.alpha, p.beta);
    wgam[ax] = caputo_l1_matrix(p.grids[ax], p.gamma_ord);
  }

  DenseMatrix A(nunk, nunk);
  std::vector<double> rhs(static_cast<std::size_t>(nunk), 0.0);

  auto add = [&](int row, int i, int j, double w) {
    if (w == 0.0) return;
    if (ix.interior(i, j))
      A.at(row, ix.index(i, j)) += w;
    else
      rhs[static_cast<std::size_t>(row)] -= w * p.boundary_phi.at(i, j);
  };

  const int jlo = p.dims == 2 ? 1 : 0;
  const int jhi = p.dims == 2 ? p.grids[1].n - 1 : 0;
  for (int i = 1; i < p.grids[0].n; ++i) {
    for (int j = jlo; j <= jhi; ++j) {
      const int row = ix.index(i, j);
      rhs[static_cast<std::size_t>(row)] += p.F.at(i, j);

      // Laplacian and first derivatives, axis 0.
      {
        const double h = p.grids[0].h;
        add(row, i - 1, j, 1.0 / (h * h));
        add(row, i, j, -2.0 / (h * h));
        add(row, i + 1, j, 1.0 / (h * h));
        const double b = p.b_coef[0].at(i, j);
        add(row, i - 1, j, -b / (2.0 * h));
        add(row, i + 1, j, b / (2.0 * h));
      }
      if (p.dims == 2) {
        const double h = p.grids[1].h;
        add(row, i, j - 1, 1.0 / (h * h));
        add(row, i, j, -2.0 / (h * h));
        add(row, i, j + 1, 1.0 / (h * h));
        const double b = p.b_coef[1].at(i, j);
        add(row, i, j - 1, -b / (2.0 * h));
        add(row, i, j + 1, b / (2.0 * h));
      }

      // Sequential and single Caputo terms along each axis.
      {
        const double a0 = p.a_coef[0].at(i, j);
        const double c0 = p.c_coef[0].at(i, j);
        for (int k = 0; k <= i; ++k) {
          add(row, k, j, a0 * wseq[0].at(i, k));
          add(row, k, j, c0 * wgam[0].at(i, k));
        }
      }
      if (p.dims == 2) {
        const double a1 = p.a_coef[1].at(i, j);
        const double c1 = p.c_coef[1].at(i, j);
        for (int k = 0; k <= j; ++k) {
          add(row, i, k, a1 * wseq[1].at(j, k));
          add(row, i, k, c1 * wgam[1].at(j, k));
        }
      }

      add(row, i, j, p.d_coef.at(i, j));
    }
  }

  LuSolver lu(A);  // copies A so the residual can be formed afterwards
  const std::vector<double> sol = lu.solve(rhs);

  EllipticSolution out;
  out.cond_estimate = lu.condition_estimate();
  out.u = p.boundary_phi;  // boundary entries stay, interior overwritten
  for (int i = 1; i < p.grids[0].n; ++i)
    for (int j = jlo; j <= jhi; ++j) out.u.at(i, j) = sol[static_cast<std::size_t>(ix.index(i, j))];

  const std::vector<double> back = matvec(A, sol);
  for (int r = 0; r < nunk; ++r)
    out.residual = std::max(out.residual,
                            std::abs(back[static_cast<std::size_t>(r)] - rhs[static_cast<std::size_t>(r)]));
  return out;
}

namespace {

struct BoundaryStats {
  double bmin = std::numeric_limits<double>::infinity();
  double bmax = -std::numeric_limits<double>::infinity();
};

BoundaryStats boundary_stats(const GridField& u) {
  BoundaryStats s;
  if (u.dims == 1) {
    s.bmin = std::min(u.at(0, 0), u.at(u.g0.n, 0));
    s.bmax = std::max(u.at(0, 0), u.at(u.g0.n, 0));
  } else {
    for (int i = 0; i <= u.g0.n; ++i)
      for (int j = 0; j <= u.g1.n; ++j) {
        if (i != 0 && i != u.g0.n && j != 0 && j != u.g1.n) continue;
        s.bmin = std::min(s.bmin, u.at(i, j));
        s.bmax = std::max(s.bmax, u.at(i, j));
      }
  }
  return s;
}

bool field_all(const GridField& f, const std::function<bool(double)>& pred) {
  for (double v : f.v)
    if (!pred(v)) return false;
  return true;
}

}  // namespace

std::vector<VerificationReport> verify_weak_principles(const GridField& u,
                                                       const EllipticProblem& p, double tol) {
  std::vector<VerificationReport> out;
  const BoundaryStats bs = boundary_stats(u);
  const double umin = u.min_value();
  const double umax = u.max_value();

  auto nonneg = [](double v) { return v >= 0.0; };
  auto nonpos = [](double v) { return v <= 0.0; };
  auto strict_neg = [](double v) { return v < 0.0; };
  auto strict_pos = [](double v) { return v > 0.0; };

  bool hyp_max = field_all(p.d_coef, nonpos) && field_all(p.F, nonneg);
  bool hyp_min = field_all(p.d_coef, nonpos) && field_all(p.F, nonpos);
  for (int ax = 0; ax < p.dims; ++ax) {
    hyp_max = hyp_max && field_all(p.a_coef[ax], nonneg) && field_all(p.c_coef[ax], strict_neg);
    hyp_min = hyp_min && field_all(p.a_coef[ax], nonneg) && field_all(p.c_coef[ax], strict_pos);
  }
  const bool phi_nonneg = [&] {
    BoundaryStats b = boundary_stats(p.boundary_phi);
    return b.bmin >= 0.0;
  }();
  const bool phi_nonpos = [&] {
    BoundaryStats b = boundary_stats(p.boundary_phi);
    return b.bmax <= 0.0;
  }();

  {  // max_grid u <= max(boundary max, 0)
    const double bound = std::max(bs.bmax, 0.0);
    VerificationReport r = VerificationReport::make("elliptic-weak-max", umax, kNaN, kNaN, bound,
                                                    bound - umax, tol);
    if (!hyp_max) {
      r.applicable = false;
      r.note = "hypotheses not met (a >= 0, c < 0, d <= 0, F >= 0) - informational only";
    }
    out.push_back(r);
  }
  {  // min_grid u >= min(boundary min, 0)
    const double bound = std::min(bs.bmin, 0.0);
    VerificationReport r = VerificationReport::make("elliptic-weak-min", umin, kNaN, kNaN, bound,
                                                    umin - bound, tol);
    if (!hyp_min) {
      r.applicable = false;
      r.note = "hypotheses not met (a >= 0, c > 0, d <= 0, F <= 0) - informational only";
    }
    out.push_back(r);
  }
  {  // nonnegativity corollary
    VerificationReport r = VerificationReport::make("elliptic-nonnegative", umin, kNaN, kNaN, 0.0,
                                                    umin, tol);
    if (!(hyp_min && phi_nonneg)) {
      r.applicable = false;
      r.note = "hypotheses not met (minimum-principle signs with phi >= 0)";
    }
    out.push_back(r);
  }
  {  // nonpositivity corollary
    VerificationReport r = VerificationReport::make("elliptic-nonpositive", umax, kNaN, kNaN, 0.0,
                                                    -umax, tol);
    if (!(hyp_max && phi_nonpos)) {
      r.applicable = false;
      r.note = "hypotheses not met (maximum-principle signs with phi <= 0)";
    }
    out.push_back(r);
  }
  return out;
}

EllipticSolution solve_cylinder(const CylinderProblem& p) {
  if (!(p.alpha > 0.0) || !(p.alpha <= 1.0) || !(p.beta > 0.0) || !(p.beta <= 1.0))
    throw std::domain_error("solve_cylinder: alpha, beta must lie in (0,1]");
  const double s = p.alpha + p.beta;
  if (!(s > 1.0) || !(s <= 2.0))
    throw std::domain_error("solve_cylinder: requires 1 < alpha + beta <= 2");
  p.phi1.validate();
  p.phi2.validate();
  if (!(p.phi1.grid == p.ygrid) || !(p.phi2.grid == p.ygrid))
    throw std::invalid_argument("solve_cylinder: phi1, phi2 must live on ygrid");
  if (std::abs(p.phi1.values.front()) > 1e-12 || std::abs(p.phi1.values.back()) > 1e-12 ||
      std::abs(p.phi2.values.front()) > 1e-12 || std::abs(p.phi2.values.back()) > 1e-12)
    std::fprintf(stderr, "warning: phi1/phi2 do not vanish at the y-boundary; exterior data wins\n");

  const int nx = p.xgrid.n;
  const int ny = p.ygrid.n;
  // Unknowns: interior nodes plus, per y-line, the inner-derivative value
  // V_j = D^beta u(a, y_j). The left-sided x-operator alone never references
  // the x = b column, so the data phi2 enters through extra equation rows at
  // x = b; V_j is the matching extra unknown (its x^beta profile is
  // annihilated by the outer Caputo factor).
  const int nin = (nx - 1) * (ny - 1);
  const int nunk = nin + (ny - 1);
  const DenseMatrix wx = sequential_caputo_matrix(p.xgrid, p.alpha, p.beta);
  const DenseMatrix ly = regional_laplacian_matrix(p.ygrid, p.lap);

  std::vector<double> vcol(static_cast<std::size_t>(nx + 1), 0.0);
  {
    const double c1 = std::pow(p.xgrid.h, -p.alpha) / gamma_fn(2.0 - p.alpha);
    const double e = 1.0 - p.alpha;
    for (int i = 1; i <= nx; ++i) {
      const double dj = static_cast<double>(i - 1);
      const double b = (i == 1) ? 1.0 : std::pow(dj, e) * std::expm1(e * std::log1p(1.0 / dj));
      vcol[static_cast<std::size_t>(i)] = -c1 * b;
    }
  }

  auto idx = [&](int i, int j) { return (i - 1) * (ny - 1) + (j - 1); };
  auto vdx = [&](int j) { return nin + (j - 1); };
  DenseMatrix A(nunk, nunk);
  std::vector<double> rhs(static_cast<std::size_t>(nunk), 0.0);

  for (int j = 1; j < ny; ++j) {
    const double phi1j = p.phi1.values[static_cast<std::size_t>(j)];
    for (int i = 1; i < nx; ++i) {
      const int row = idx(i, j);
      rhs[static_cast<std::size_t>(row)] += p.f.at(i, j);
      // -D^alpha D^beta in x: columns k = 0..i along the x-line; k = 0 is data.
      rhs[static_cast<std::size_t>(row)] += wx.at(i, 0) * phi1j;
      for (int k = 1; k <= i; ++k) {
        const double w = -wx.at(i, k);
        if (w != 0.0) A.at(row, idx(k, j)) += w;
      }
      A.at(row, vdx(j)) -= vcol[static_cast<std::size_t>(i)];
      // (-Delta)^delta in y: the exterior condition zeroes the boundary columns.
      for (int m = 1; m < ny; ++m) {
        const double w = ly.at(j, m);
        if (w != 0.0) A.at(row, idx(i, m)) += w;
      }
    }
    // Equation at x = b, where u(b, y_j) = phi2(y_j) is data.
    {
      const int row = vdx(j);
      rhs[static_cast<std::size_t>(row)] += p.f.at(nx, j);
      rhs[static_cast<std::size_t>(row)] += wx.at(nx, 0) * phi1j;
      rhs[static_cast<std::size_t>(row)] +=
          wx.at(nx, nx) * p.phi2.values[static_cast<std::size_t>(j)];
      for (int k = 1; k < nx; ++k) {
        const double w = -wx.at(nx, k);
        if (w != 0.0) A.at(row, idx(k, j)) += w;
      }
      A.at(row, vdx(j)) -= vcol[static_cast<std::size_t>(nx)];
      double lap_phi2 = 0.0;
      for (int m = 0; m <= ny; ++m)
        lap_phi2 += ly.at(j, m) * p.phi2.values[static_cast<std::size_t>(m)];
      rhs[static_cast<std::size_t>(row)] -= lap_phi2;
    }
  }

  LuSolver lu(A);
  const std::vector<double> sol = lu.solve(rhs);

  EllipticSolution out;
  out.cond_estimate = lu.condition_estimate();
  out.u.dims = 2;
  out.u.g0 = p.xgrid;
  out.u.g1 = p.ygrid;
  out.u.v.assign(static_cast<std::size_t>(nx + 1) * (ny + 1), 0.0);
  for (int j = 1; j < ny; ++j) {
    out.u.at(0, j) = p.phi1.values[static_cast<std::size_t>(j)];
    out.u.at(nx, j) = p.phi2.values[static_cast<std::size_t>(j)];
  }
  for (int i = 1; i < nx; ++i)
    for (int j = 1; j < ny; ++j) out.u.at(i, j) = sol[static_cast<std::size_t>(idx(i, j))];

  const std::vector<double> back = matvec(A, sol);
  for (int r = 0; r < nunk; ++r)
    out.residual = std::max(out.residual,
                            std::abs(back[static_cast<std::size_t>(r)] - rhs[static_cast<std::size_t>(r)]));
  return out;
}

std::vector<VerificationReport> verify_cylinder_principles(const GridField& u,
                                                           const CylinderProblem& p, double tol) {
  std::vector<VerificationReport> out;
  const double fmin = p.f.min_value();
  const double fmax = p.f.max_value();
  const double phimin = std::min(p.phi1.min_value(), p.phi2.min_value());
  const double phimax = std::max(p.phi1.max_value(), p.phi2.max_value());
  const double umin = u.min_value();
  const double umax = u.max_value();

  {  // f >= 0, phi >= 0 => u >= 0
    VerificationReport r = VerificationReport::make("cylinder-sign-nonnegative", umin, kNaN, kNaN,
                                                    0.0, umin, tol);
    if (!(fmin >= 0.0 && phimin >= 0.0)) {
      r.applicable = false;
      r.note = "hypotheses not met (needs f >= 0 and phi1, phi2 >= 0)";
    }
    out.push_back(r);
  }
  {  // f <= 0, phi <= 0 => u <= 0
    VerificationReport r = VerificationReport::make("cylinder-sign-nonpositive", umax, kNaN, kNaN,
                                                    0.0, -umax, tol);
    if (!(fmax <= 0.0 && phimax <= 0.0)) {
      r.applicable = false;
      r.note = "hypotheses not met (needs f <= 0 and phi1, phi2 <= 0)";
    }
    out.push_back(r);
  }
  // Gamma = {a,b} x dOmega carries the exterior value 0.
  {  // subsolution (f <= 0 with phi <= 0): max attained on Gamma
    VerificationReport r = VerificationReport::make("cylinder-max-on-gamma", umax, kNaN, kNaN, 0.0,
                                                    -umax, tol);
    if (!(fmax <= 0.0 && phimax <= 0.0)) {
      r.applicable = false;
      r.note = "hypotheses not met (needs f <= 0 and phi1, phi2 <= 0)";
    } else {
      r.note = "grid max vs max over Gamma (= 0)";
    }
    out.push_back(r);
  }
  {  // supersolution: min attained on Gamma
    VerificationReport r = VerificationReport::make("cylinder-min-on-gamma", umin, kNaN, kNaN, 0.0,
                                                    umin, tol);
    if (!(fmin >= 0.0 && phimin >= 0.0)) {
      r.applicable = false;
      r.note = "hypotheses not met (needs f >= 0 and phi1, phi2 >= 0)";
    } else {
      r.note = "grid min vs min over Gamma (= 0)";
    }
    out.push_back(r);
  }
  {  // uniqueness: bit-identical re-solve
    const EllipticSolution again = solve_cylinder(p);
    bool identical = again.u.v.size() == u.v.size();
    if (identical)
      for (std::size_t i = 0; i < u.v.size(); ++i)
        if (u.v[i] != again.u.v[i]) {
          identical = false;
          break;
        }
    VerificationReport r = VerificationReport::make("cylinder-uniqueness-resolve", 0.0, kNaN, kNaN,
                                                    0.0, identical ? 0.0 : -1.0, tol);
    r.note = identical ? "re-solve bit-identical" : "re-solve differs";
    out.push_back(r);
  }
  return out;
}

}  // namespace fracmax
