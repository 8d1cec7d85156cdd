#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dwell/perturb.hpp"
#include "dwell/quadrature.hpp"
#include "dwell/serial.hpp"
#include "dwell/sweep_point.hpp"

namespace dwell::serial {

Tridiagonal assemble_tridiagonal(const std::function<double(double)>& v, const GridSpec& grid) {
  if (grid.n_interior < 1) throw std::invalid_argument("grid needs at least one interior node");
  const int n = grid.n_interior;
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  Tridiagonal t;
  t.off.assign(static_cast<std::size_t>(n - 1), -inv_h2);
  for (int i = 0; i < n; ++i) t.diag.push_back(2.0 * inv_h2 + v(grid.node(i)));
  return t;
}

std::vector<double> eigen_tridiag_smallest(const Tridiagonal& t, int k) {
  if (t.off.size() + 1 != t.diag.size()) throw std::invalid_argument("malformed tridiagonal matrix");
  if (k < 1 || k > t.size()) throw std::invalid_argument("level count k must be in 1..n");
  const int n = t.size();
  constexpr double eps = std::numeric_limits<double>::epsilon();

  std::vector<double> off2(t.off.size());
  double max_off2 = 1.0;
  for (std::size_t i = 0; i < t.off.size(); ++i) {
    off2[i] = t.off[i] * t.off[i];
    max_off2 = std::max(max_off2, off2[i]);
  }
  const double pivmin = std::numeric_limits<double>::min() * max_off2;

  double g_lo = std::numeric_limits<double>::infinity();
  double g_hi = -g_lo;
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off[i - 1]);
    if (i + 1 < n) radius += std::abs(t.off[i]);
    g_lo = std::min(g_lo, t.diag[i] - radius);
    g_hi = std::max(g_hi, t.diag[i] + radius);
  }
  const double pad = 2.0 * eps * std::max(std::abs(g_lo), std::abs(g_hi)) + 1e-300;
  g_lo -= pad;
  g_hi += pad;

  auto count = [&](double x) {
    int c = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
      q = i == 0 ? t.diag[0] - x : t.diag[i] - x - off2[i - 1] / q;
      if (std::abs(q) < pivmin) q = -pivmin;
      if (q < 0.0) ++c;
    }
    return c;
  };

  std::vector<double> eig;
  for (int j = 0; j < k; ++j) {
    double lo = g_lo;
    double hi = g_hi;
    for (;;) {
      const double mid = 0.5 * (lo + hi);
      const double tol = std::max(kBisectionTolerance, 4.0 * eps * std::max(std::abs(lo), std::abs(hi)));
      if (hi - lo <= tol || mid <= lo || mid >= hi) {
        eig.push_back(mid);
        break;
      }
      (count(mid) <= j ? lo : hi) = mid;
    }
  }
  return eig;
}

DenseTable quadrature_matrix(int m, int count, const std::function<double(double)>& f) {
  const QuadratureRule& rule = basis_quadrature();
  const std::size_t nq = rule.nodes.size();
  std::vector<std::vector<double>> psi;
  for (int n = 0; n < std::max(count, 4); ++n) {
    const double norm = basis_norm(n, m);
    std::vector<double> row(nq);
    for (std::size_t q = 0; q < nq; ++q) {
      const double x = rule.nodes[q];
      row[q] = norm * (std::pow(std::sin(x), m + 0.5) * gegenbauer(n, m + 0.5, std::cos(x)));
    }
    psi.push_back(std::move(row));
  }
  std::vector<double> weighted(nq);
  for (std::size_t q = 0; q < nq; ++q) weighted[q] = rule.weights[q] * f(rule.nodes[q]);

  DenseTable out{count, std::vector<double>(static_cast<std::size_t>(count) * count)};
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      double sum = 0.0;
      for (std::size_t q = 0; q < nq; ++q) sum += weighted[q] * psi[i][q] * psi[j][q];
      out.values[static_cast<std::size_t>(i) * count + j] = sum;
    }
  }
  return out;
}

SweepResult sweep(const SweepConfig& config) {
  validate(config);
  const auto series = splitting_series(config.m, 2, kDefaultBasisSize).R;
  SweepResult result;
  for (int i = 0; i < config.steps; ++i) {
    try {
      result.rows.push_back(compute_sweep_point(config, series, sweep_alpha(config, i)));
    } catch (const std::exception& e) {
      result.failure = e.what();
      break;
    }
  }
  return result;
}

}  // namespace dwell::serial
