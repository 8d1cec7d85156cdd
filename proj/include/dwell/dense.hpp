#pragma once

#include <cstddef>
#include <vector>

namespace dwell {

/// Square row-major matrix. Only the shape is enforced; symmetry is the
/// caller's contract where needed.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  static DenseMatrix identity(int n);
  static DenseMatrix diagonal(const std::vector<double>& d);

  int size() const { return n_; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  bool is_symmetric(double tol) const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<double> data_;
};

inline constexpr double kJacobiThreshold = 1e-13;
inline constexpr int kJacobiMaxSweeps = 50;

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Stops once the off-diagonal Frobenius norm falls to kJacobiThreshold times
/// the matrix norm. Throws std::invalid_argument for an asymmetric input and
/// ConvergenceError after kJacobiMaxSweeps sweeps.
std::vector<double> eigen_sym(DenseMatrix a);

}  // namespace dwell
