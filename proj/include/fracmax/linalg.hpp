#pragma once

#include <vector>

namespace fracmax {

/// Row-major dense matrix, just enough for the desk-scale direct solves.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x);

/// LU factorization with partial pivoting.
class LuSolver {
 public:
  explicit LuSolver(DenseMatrix a);  // throws on a (numerically) singular matrix

  std::vector<double> solve(std::vector<double> rhs) const;
  std::vector<double> solve_transposed(std::vector<double> rhs) const;

  /// Hager-style 1-norm estimate of ||A^{-1}||, usable for a condition estimate.
  double inverse_norm1_estimate() const;
  double norm1() const { return norm1_; }
  double condition_estimate() const { return norm1_ * inverse_norm1_estimate(); }

 private:
  DenseMatrix lu_;
  std::vector<int> perm_;
  double norm1_ = 0.0;
};

}  // namespace fracmax
