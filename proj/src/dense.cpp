#include "dwell/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dwell/errors.hpp"

namespace dwell {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix out(n);
  for (int i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<double>& d) {
  DenseMatrix out(static_cast<int>(d.size()));
  for (int i = 0; i < out.size(); ++i) out(i, i) = d[i];
  return out;
}

bool DenseMatrix::is_symmetric(double tol) const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    }
  }
  return true;
}

namespace {

double off_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) sum += a(i, j) * a(i, j);
  }
  return std::sqrt(2.0 * sum);
}

double frobenius(const DenseMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) sum += a(i, j) * a(i, j);
  }
  return std::sqrt(sum);
}

// Zero a(p, q) with a two-sided rotation; updates rows and columns p, q.
void rotate(DenseMatrix& a, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int r = 0; r < a.size(); ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    const double new_rp = arp - s * (arq + tau * arp);
    const double new_rq = arq + s * (arp - tau * arq);
    a(r, p) = new_rp;
    a(p, r) = new_rp;
    a(r, q) = new_rq;
    a(q, r) = new_rq;
  }
}

}  // namespace

std::vector<double> eigen_sym(DenseMatrix a) {
  if (!a.is_symmetric(1e-12)) throw std::invalid_argument("eigen_sym needs a symmetric matrix");
  const int n = a.size();
  const double target = kJacobiThreshold * std::max(frobenius(a), 1e-300);

  bool done = off_norm(a) <= target;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !done; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) rotate(a, p, q);
    }
    done = off_norm(a) <= target;
  }
  if (!done) throw ConvergenceError("Jacobi eigensolver did not converge in 50 sweeps");

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace dwell
