#pragma once

#include <array>
#include <span>
#include <vector>

namespace dwell {

/// Taylor coefficients in alpha of E_0, E_1 and their difference R = e1 - e0.
struct SeriesCoefficients {
  int m = 0;
  int l_max = 0;
  std::vector<double> e0;
  std::vector<double> e1;
  std::vector<double> R;
};

inline constexpr int kDefaultSeriesOrder = 6;
inline constexpr int kDefaultBasisSize = 64;

/// Smallest basis size that keeps orders 0..l_max of level n exact.
inline int min_series_basis(int n, int l_max) { return n + 2 * l_max + 4; }

/// Rayleigh-Schrodinger coefficients e^(0..l_max) of level n for
/// H(alpha) = H0 - alpha cos^2 x in the first N basis states, intermediate
/// normalization. Throws TruncationError when N < n + 2 l_max + 4.
std::vector<double> rs_energy_series(int n, int m, int l_max, int N);

SeriesCoefficients splitting_series(int m, int l_max, int N);

/// sum_l R[l] alpha^l by Horner's rule.
double evaluate_series(std::span<const double> R, double alpha);

/// -4 (m + 1) / ((2m + 3)(2m + 5)).
double closed_form_R1(int m);

/// |alpha| beyond which the series printout carries a caution: E_3^(0) - E_1^(0).
double series_caution_alpha(int m);

/// Published splitting coefficients R_0, R_1, R_2 for m = 2, and the
/// splittings they yield at alpha = 5 and alpha = 10.
inline constexpr std::array<double, 3> kPublishedSplittingM2 = {12.0, -0.19047619, -0.001374287};
inline constexpr double kPublishedSplittingAlpha5 = 11.01326187;
inline constexpr double kPublishedSplittingAlpha10 = 9.9578094;

}  // namespace dwell
