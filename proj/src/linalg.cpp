#include "fracmax/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fracmax {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: dimension mismatch");
  DenseMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      const double* brow = &b.data[static_cast<std::size_t>(k) * b.cols];
      double* crow = &c.data[static_cast<std::size_t>(i) * c.cols];
      for (int j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != a.cols) throw std::invalid_argument("matvec: dimension mismatch");
  std::vector<double> y(static_cast<std::size_t>(a.rows), 0.0);
  for (int i = 0; i < a.rows; ++i) {
    const double* row = &a.data[static_cast<std::size_t>(i) * a.cols];
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += row[j] * x[j];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

LuSolver::LuSolver(DenseMatrix a) : lu_(std::move(a)) {
  if (lu_.rows != lu_.cols) throw std::invalid_argument("LuSolver: matrix must be square");
  const int n = lu_.rows;
  perm_.resize(static_cast<std::size_t>(n));

  for (int j = 0; j < n; ++j) {
    double colsum = 0.0;
    for (int i = 0; i < n; ++i) colsum += std::abs(lu_.at(i, j));
    if (colsum > norm1_) norm1_ = colsum;
  }

  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(lu_.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_.at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (!(best > 0.0) || !std::isfinite(best)) {
      std::ostringstream os;
      os << "LuSolver: singular pivot at column " << k << " (|pivot| = " << best << ")";
      throw std::runtime_error(os.str());
    }
    perm_[static_cast<std::size_t>(k)] = piv;
    if (piv != k)
      for (int j = 0; j < n; ++j) std::swap(lu_.at(k, j), lu_.at(piv, j));
    const double inv = 1.0 / lu_.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double m = lu_.at(i, k) * inv;
      lu_.at(i, k) = m;
      if (m == 0.0) continue;
      const double* krow = &lu_.data[static_cast<std::size_t>(k) * n];
      double* irow = &lu_.data[static_cast<std::size_t>(i) * n];
      for (int j = k + 1; j < n; ++j) irow[j] -= m * krow[j];
    }
  }
}

std::vector<double> LuSolver::solve(std::vector<double> rhs) const {
  const int n = lu_.rows;
  if (static_cast<int>(rhs.size()) != n) throw std::invalid_argument("LuSolver::solve: size mismatch");
  // The stored factors live in final row order, so the whole interchange
  // sequence must hit the right-hand side before substitution starts.
  for (int k = 0; k < n; ++k) {
    const int p = perm_[static_cast<std::size_t>(k)];
    if (p != k) std::swap(rhs[static_cast<std::size_t>(k)], rhs[static_cast<std::size_t>(p)]);
  }
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i)
      rhs[static_cast<std::size_t>(i)] -= lu_.at(i, k) * rhs[static_cast<std::size_t>(k)];
  for (int i = n - 1; i >= 0; --i) {
    double s = rhs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= lu_.at(i, j) * rhs[static_cast<std::size_t>(j)];
    rhs[static_cast<std::size_t>(i)] = s / lu_.at(i, i);
  }
  return rhs;
}

std::vector<double> LuSolver::solve_transposed(std::vector<double> rhs) const {
  // Solves A^T y = rhs via (PA = LU) => A^T = U^T L^T P.
  const int n = lu_.rows;
  if (static_cast<int>(rhs.size()) != n)
    throw std::invalid_argument("LuSolver::solve_transposed: size mismatch");
  // Forward: U^T z = rhs.
  for (int i = 0; i < n; ++i) {
    double s = rhs[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) s -= lu_.at(j, i) * rhs[static_cast<std::size_t>(j)];
    rhs[static_cast<std::size_t>(i)] = s / lu_.at(i, i);
  }
  // Backward: L^T w = z (unit diagonal).
  for (int i = n - 1; i >= 0; --i) {
    double s = rhs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= lu_.at(j, i) * rhs[static_cast<std::size_t>(j)];
    rhs[static_cast<std::size_t>(i)] = s;
  }
  // Undo row permutation.
  for (int k = n - 1; k >= 0; --k) {
    const int p = perm_[static_cast<std::size_t>(k)];
    if (p != k) std::swap(rhs[static_cast<std::size_t>(k)], rhs[static_cast<std::size_t>(p)]);
  }
  return rhs;
}

double LuSolver::inverse_norm1_estimate() const {
  const int n = lu_.rows;
  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    std::vector<double> y = solve(x);
    double norm = 0.0;
    for (double v : y) norm += std::abs(v);
    est = std::max(est, norm);
    std::vector<double> xi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xi[static_cast<std::size_t>(i)] = (y[static_cast<std::size_t>(i)] >= 0.0) ? 1.0 : -1.0;
    std::vector<double> z = solve_transposed(xi);
    int jmax = 0;
    double zmax = 0.0;
    for (int j = 0; j < n; ++j) {
      const double v = std::abs(z[static_cast<std::size_t>(j)]);
      if (v > zmax) {
        zmax = v;
        jmax = j;
      }
    }
    double zx = 0.0;
    for (int j = 0; j < n; ++j) zx += z[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    if (zmax <= zx) break;  // converged to a local maximizer
    x.assign(static_cast<std::size_t>(n), 0.0);
    x[static_cast<std::size_t>(jmax)] = 1.0;
  }
  return est;
}

}  // namespace fracmax
