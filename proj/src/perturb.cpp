#include "dwell/perturb.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dwell/basis.hpp"
#include "dwell/errors.hpp"

namespace dwell {
namespace {

// y = W x with W = -(cos^2 matrix), pentadiagonal.
void apply_perturbation(int m, const std::vector<double>& x, std::vector<double>& y) {
  const int N = static_cast<int>(x.size());
  for (int i = 0; i < N; ++i) {
    double sum = cos2_element(i, i, m) * x[i];
    if (i >= 2) sum += cos2_element(i, i - 2, m) * x[i - 2];
    if (i + 2 < N) sum += cos2_element(i, i + 2, m) * x[i + 2];
    y[i] = -sum;
  }
}

}  // namespace

std::vector<double> rs_energy_series(int n, int m, int l_max, int N) {
  if (n < 0 || m < 0 || l_max < 0) {
    throw std::invalid_argument("series level, m and order must be non-negative");
  }
  if (N < min_series_basis(n, l_max)) {
    throw TruncationError("basis size " + std::to_string(N) + " too small for level " +
                          std::to_string(n) + " at order " + std::to_string(l_max) +
                          "; need N >= " + std::to_string(min_series_basis(n, l_max)));
  }

  const auto dim = static_cast<std::size_t>(N);
  std::vector<double> energy0(dim);
  for (int k = 0; k < N; ++k) energy0[k] = unperturbed_energy(k, m);

  std::vector<double> e(static_cast<std::size_t>(l_max) + 1, 0.0);
  e[0] = energy0[n];
  if (l_max == 0) return e;

  // corrections[l] is |c^(l)>, with <n|c^(l)> = 0 for l >= 1.
  std::vector<std::vector<double>> corrections;
  corrections.emplace_back(dim, 0.0);
  corrections[0][n] = 1.0;

  std::vector<double> w_c(dim);
  apply_perturbation(m, corrections[0], w_c);
  e[1] = w_c[n];

  for (int l = 1; l < l_max; ++l) {
    // w_c holds W|c^(l-1)>.
    std::vector<double> rhs = w_c;
    for (int j = 1; j <= l; ++j) {
      const auto& c = corrections[l - j];
      for (std::size_t k = 0; k < dim; ++k) rhs[k] -= e[j] * c[k];
    }
    std::vector<double> next(dim, 0.0);
    for (int k = 0; k < N; ++k) {
      if (k != n) next[k] = rhs[k] / (energy0[n] - energy0[k]);
    }
    corrections.push_back(std::move(next));
    apply_perturbation(m, corrections[l], w_c);
    e[l + 1] = w_c[n];
  }
  return e;
}

SeriesCoefficients splitting_series(int m, int l_max, int N) {
  SeriesCoefficients out;
  out.m = m;
  out.l_max = l_max;
  out.e0 = rs_energy_series(0, m, l_max, N);
  out.e1 = rs_energy_series(1, m, l_max, N);
  out.R.resize(out.e0.size());
  for (std::size_t l = 0; l < out.R.size(); ++l) out.R[l] = out.e1[l] - out.e0[l];
  return out;
}

double evaluate_series(std::span<const double> R, double alpha) {
  if (R.empty()) throw std::invalid_argument("series needs at least one coefficient");
  double acc = 0.0;
  for (auto it = R.rbegin(); it != R.rend(); ++it) acc = acc * alpha + *it;
  return acc;
}

double closed_form_R1(int m) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  return -4.0 * (m + 1.0) / ((2.0 * m + 3.0) * (2.0 * m + 5.0));
}

double series_caution_alpha(int m) { return unperturbed_energy(3, m) - unperturbed_energy(1, m); }

}  // namespace dwell
