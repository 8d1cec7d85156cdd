#include "dwell/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dwell/basis.hpp"

namespace dwell {
namespace {

constexpr double kRelativeConvergence = 1e-10;

std::vector<double> full_spectrum(int m, double alpha, int N) {
  return eigen_sym(assemble(m, alpha, N).H);
}

}  // namespace

SpectralMatrix assemble(int m, double alpha, int N) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  if (N < 8) throw std::invalid_argument("spectral truncation N must be >= 8");
  SpectralMatrix out{m, alpha, N, DenseMatrix(N)};
  for (int n = 0; n < N; ++n) {
    out.H(n, n) = unperturbed_energy(n, m) - alpha * cos2_element(n, n, m);
    if (n + 2 < N) {
      const double coupling = -alpha * cos2_element(n, n + 2, m);
      out.H(n, n + 2) = coupling;
      out.H(n + 2, n) = coupling;
    }
  }
  return out;
}

ParityBlocks parity_blocks(const SpectralMatrix& matrix) {
  const int N = matrix.N;
  const int n_even = (N + 1) / 2;
  const int n_odd = N / 2;
  ParityBlocks blocks{DenseMatrix(n_even), DenseMatrix(n_odd)};
  for (int i = 0; i < n_even; ++i) {
    for (int j = 0; j < n_even; ++j) blocks.even(i, j) = matrix.H(2 * i, 2 * j);
  }
  for (int i = 0; i < n_odd; ++i) {
    for (int j = 0; j < n_odd; ++j) blocks.odd(i, j) = matrix.H(2 * i + 1, 2 * j + 1);
  }
  return blocks;
}

Spectrum spectrum_spectral(int m, double alpha, int N, int k) {
  if (k < 1 || k > N) throw std::invalid_argument("level count k must be in 1..N");
  const auto coarse = full_spectrum(m, alpha, N);
  const auto fine = full_spectrum(m, alpha, 2 * N);

  Spectrum out;
  out.method = Method::Spectral;
  out.params = SymWellParams{alpha, m};
  out.energies.assign(coarse.begin(), coarse.begin() + k);
  out.converged = true;
  for (int i = 0; i < k; ++i) {
    const double change = std::abs(fine[i] - coarse[i]);
    out.est_error = std::max(out.est_error, change);
    if (change > kRelativeConvergence * std::max(1.0, std::abs(coarse[i]))) out.converged = false;
  }
  return out;
}

Splitting splitting_numeric(int m, double alpha, int N) {
  if (N < 16) throw std::invalid_argument("splitting needs N >= 16");
  const auto coarse = full_spectrum(m, alpha, N);
  const auto fine = full_spectrum(m, alpha, 2 * N);
  Splitting out;
  out.t = coarse[1] - coarse[0];
  out.est_error = std::abs((fine[1] - fine[0]) - out.t);
  out.converged = out.est_error <= kRelativeConvergence * std::max(1.0, std::abs(out.t));
  return out;
}

}  // namespace dwell

namespace dwell {

std::array<double, 4> fit_splitting_polynomial(int m, int N) {
  constexpr int n = 4;
  std::array<std::array<double, n + 1>, n> aug{};
  for (int i = 0; i < n; ++i) {
    const double alpha = kSeriesFitAlphas[i];
    double power = 1.0;
    for (int j = 0; j < n; ++j) {
      aug[i][j] = power;
      power *= alpha;
    }
    aug[i][n] = splitting_numeric(m, alpha, N).t;
  }
  // Gaussian elimination with partial pivoting on the Vandermonde system.
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(aug[r][col]) > std::abs(aug[pivot][col])) pivot = r;
    }
    std::swap(aug[col], aug[pivot]);
    for (int r = col + 1; r < n; ++r) {
      const double f = aug[r][col] / aug[col][col];
      for (int c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  std::array<double, n> coef{};
  for (int r = n - 1; r >= 0; --r) {
    double sum = aug[r][n];
    for (int c = r + 1; c < n; ++c) sum -= aug[r][c] * coef[c];
    coef[r] = sum / aug[r][r];
  }
  return coef;
}

}  // namespace dwell

namespace dwell {

std::string_view to_string(Method method) {
  return method == Method::Spectral ? "spectral" : "fdm";
}

}  // namespace dwell
