#pragma once

#include <functional>
#include <vector>

namespace dwell {

/// Exact alpha = 0 eigenbasis psi_0..psi_{N-1} for centrifugal index m.
struct BasisSpec {
  int m = 0;
  int N = 64;
  double lambda() const { return m + 0.5; }
};

void validate(const BasisSpec& spec);

/// E_n^(0) = (n + m + 1/2)^2 - 1/4.
double unperturbed_energy(int n, int m);

/// Ultraspherical polynomial C_n^lambda(u) by forward three-term recurrence.
double gegenbauer(int n, double lambda, double u);

/// 1 / sqrt(int_0^pi sin^(2m+1) x C_n(cos x)^2 dx), by 200-node Gauss-Legendre.
double basis_norm(int n, int m);

/// psi_n(x) = N_n sin^(m+1/2) x C_n^(m+1/2)(cos x); positive as x -> 0+.
/// Throws DomainError outside (0, pi).
double eval_basis_function(int n, int m, double x);

/// <psi_n | cos x | psi_{n+1}>; the only nonzero elements of cos x.
double cos_offdiag(int n, int m);

/// <psi_i | cos^2 x | psi_j>; nonzero only for |i - j| in {0, 2}.
double cos2_element(int i, int j, int m);

/// Row-major dense square matrix, count x count.
struct DenseTable {
  int size = 0;
  std::vector<double> values;
  double operator()(int i, int j) const { return values[static_cast<std::size_t>(i) * size + j]; }
};

/// Basis with precomputed normalization constants.
class Basis {
 public:
  explicit Basis(BasisSpec spec);

  const BasisSpec& spec() const { return spec_; }
  int size() const { return spec_.N; }
  double norm(int n) const { return norms_.at(static_cast<std::size_t>(n)); }

  /// Throws DomainError outside (0, pi).
  double operator()(int n, double x) const;

  /// psi_0..psi_{N-1} at all points of x: row n holds psi_n(x_q).
  std::vector<std::vector<double>> tabulate(const std::vector<double>& x) const;

 private:
  BasisSpec spec_;
  std::vector<double> norms_;
};

/// <psi_i | f | psi_j> for i, j < count by the shared 200-node quadrature.
/// Rows are filled in parallel.
DenseTable quadrature_matrix(int m, int count, const std::function<double(double)>& f);

/// Gram matrix <psi_i | psi_j>.
DenseTable gram_matrix(int m, int count);

}  // namespace dwell
