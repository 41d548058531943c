#pragma once

#include <functional>
#include <vector>

#include "fracmax/fracops.hpp"
#include "fracmax/grid.hpp"
#include "fracmax/report.hpp"

namespace fracmax {

/// Scalar samples on a 1-D grid or a 2-D tensor grid (axis-0 major).
struct GridField {
  int dims = 1;
  Grid1D g0;
  Grid1D g1;  // meaningful when dims == 2
  std::vector<double> v;

  static GridField sample(int dims, const Grid1D& g0, const Grid1D& g1,
                          const std::function<double(double, double)>& f);
  static GridField constant(int dims, const Grid1D& g0, const Grid1D& g1, double c);

  double at(int i, int j) const {
    return dims == 1 ? v[static_cast<std::size_t>(i)]
                     : v[static_cast<std::size_t>(i) * (g1.n + 1) + static_cast<std::size_t>(j)];
  }
  double& at(int i, int j) {
    return dims == 1 ? v[static_cast<std::size_t>(i)]
                     : v[static_cast<std::size_t>(i) * (g1.n + 1) + static_cast<std::size_t>(j)];
  }
  double min_value() const;
  double max_value() const;
};

/// Elliptic equation on a 1-D interval or 2-D parallelepiped:
///   Laplace(u) + sum_j a_j D^alpha D^beta u + sum_j b_j du/dx_j
///     + sum_j c_j D^gamma u + d u = F,   u = phi on the boundary.
/// The fractional derivatives act per axis from the low edge.
struct EllipticProblem {
  int dims = 1;
  Grid1D grids[2];
  double alpha = 0.75;
  double beta = 0.75;      // 1 < alpha + beta <= 2
  double gamma_ord = 0.5;  // (0,1]
  GridField a_coef[2];
  GridField b_coef[2];
  GridField c_coef[2];
  GridField d_coef;
  GridField F;
  GridField boundary_phi;  // only boundary entries are read
};

struct EllipticSolution {
  GridField u;
  double residual = 0.0;       // max-norm residual of the solved linear system
  double cond_estimate = 0.0;  // 1-norm condition estimate of the system matrix
};

/// Dense assembly over interior nodes (second-order central differences for
/// the local terms, per-axis L1 composition matrices for the fractional
/// terms), Dirichlet rows eliminated into the right-hand side, direct solve.
EllipticSolution solve_elliptic(const EllipticProblem& p);

/// Weak maximum/minimum principles and the sign corollaries; checks whose
/// coefficient sign hypotheses fail are downgraded to informational.
std::vector<VerificationReport> verify_weak_principles(const GridField& u,
                                                       const EllipticProblem& p, double tol);

/// Cylinder problem  -D^alpha_x D^beta_x u + (-Delta)^delta_y u = f on
/// (a,b) x Omega with u = 0 on the y-boundary and u(a,.) = phi1, u(b,.) = phi2.
struct CylinderProblem {
  Grid1D xgrid;
  Grid1D ygrid;
  double alpha = 0.75;
  double beta = 0.75;  // 1 < alpha + beta <= 2
  FracLaplacianSpec lap;
  GridField f;        // (x,y) samples, dims = 2 over (xgrid, ygrid)
  SampledFn phi1;     // data at x = a, on ygrid
  SampledFn phi2;     // data at x = b, on ygrid
};

EllipticSolution solve_cylinder(const CylinderProblem& p);

/// Sign principles under sign-restricted data, extremum attainment on the
/// edge set Gamma = {a,b} x dOmega, and re-solve determinism.
std::vector<VerificationReport> verify_cylinder_principles(const GridField& u,
                                                           const CylinderProblem& p, double tol);

}  // namespace fracmax
