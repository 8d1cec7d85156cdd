#pragma once

#include <array>

#include "dwell/dense.hpp"
#include "dwell/spectrum.hpp"

namespace dwell {

/// Galerkin matrix of -d^2/dx^2 + V in the exact alpha = 0 basis:
///   H[n][k] = E_n^(0) delta_nk - alpha <psi_n|cos^2 x|psi_k>
/// Band structure: nonzero only for |n - k| in {0, 2}.
struct SpectralMatrix {
  int m = 0;
  double alpha = 0.0;
  int N = 0;
  DenseMatrix H;
};

inline constexpr int kDefaultSpectralSize = 64;

/// Throws std::invalid_argument for N < 8 or m < 0.
SpectralMatrix assemble(int m, double alpha, int N);

/// Even-n and odd-n sub-blocks. Each is tridiagonal in its own indexing.
struct ParityBlocks {
  DenseMatrix even;
  DenseMatrix odd;
};

ParityBlocks parity_blocks(const SpectralMatrix& matrix);

/// Lowest k levels at truncation N; converged iff each level moves by at most
/// 1e-10 relative when N is doubled (est_error is the largest such move).
Spectrum spectrum_spectral(int m, double alpha, int N, int k);

/// t = E_1 - E_0, with the same doubling test applied to t. N >= 16.
Splitting splitting_numeric(int m, double alpha, int N);

}  // namespace dwell

namespace dwell {

/// Sample points used to fit the splitting polynomial from the Galerkin oracle.
inline constexpr std::array<double, 4> kSeriesFitAlphas = {0.05, 0.1, 0.2, 0.4};

/// Coefficients c_0..c_3 of the cubic interpolating t(alpha) from
/// splitting_numeric at kSeriesFitAlphas. An independent estimate of the
/// low-order splitting series.
std::array<double, 4> fit_splitting_polynomial(int m, int N);

}  // namespace dwell
