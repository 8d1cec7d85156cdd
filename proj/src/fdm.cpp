#include "dwell/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dwell/errors.hpp"

namespace dwell {

GridSpec GridSpec::for_potential(const PotentialParams& p, int n_interior) {
  const Interval dom = domain(p);
  return {n_interior, dom.lo, dom.hi};
}

Tridiagonal assemble_tridiagonal(const std::function<double(double)>& v, const GridSpec& grid) {
  if (grid.n_interior < 1) throw std::invalid_argument("grid needs at least one interior node");
  const int n = grid.n_interior;
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  Tridiagonal t;
  t.diag.resize(static_cast<std::size_t>(n));
  t.off.assign(static_cast<std::size_t>(n - 1), -inv_h2);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) t.diag[i] = 2.0 * inv_h2 + v(grid.node(i));
  return t;
}

Tridiagonal assemble_tridiagonal(const PotentialParams& p, const GridSpec& grid) {
  return assemble_tridiagonal([&p](double x) { return evaluate(p, x); }, grid);
}

namespace {

struct SturmData {
  const std::vector<double>& diag;
  std::vector<double> off2;
  double pivmin;
};

SturmData make_sturm_data(const Tridiagonal& t) {
  SturmData data{t.diag, std::vector<double>(t.off.size()), 0.0};
  double max_off2 = 1.0;
  for (std::size_t i = 0; i < t.off.size(); ++i) {
    data.off2[i] = t.off[i] * t.off[i];
    max_off2 = std::max(max_off2, data.off2[i]);
  }
  data.pivmin = std::numeric_limits<double>::min() * max_off2;
  return data;
}

int count_below(const SturmData& data, double x) {
  double q = data.diag[0] - x;
  if (std::abs(q) < data.pivmin) q = -data.pivmin;
  int count = q < 0.0 ? 1 : 0;
  for (std::size_t i = 1; i < data.diag.size(); ++i) {
    q = data.diag[i] - x - data.off2[i - 1] / q;
    if (std::abs(q) < data.pivmin) q = -data.pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin(const Tridiagonal& t) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const int n = t.size();
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off[i - 1]);
    if (i + 1 < n) radius += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)) + 1e-300;
  return {lo - pad, hi + pad};
}

double bisect_level(const SturmData& data, int j, double lo, double hi) {
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    const double tol = std::max(kBisectionTolerance,
                                4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)));
    if (hi - lo <= tol || mid <= lo || mid >= hi) return mid;
    if (count_below(data, mid) <= j) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

}  // namespace

int sturm_count(const Tridiagonal& t, double x) {
  if (t.diag.empty()) return 0;
  return count_below(make_sturm_data(t), x);
}

std::vector<double> eigen_tridiag_smallest(const Tridiagonal& t, int k) {
  if (t.off.size() + 1 != t.diag.size()) throw std::invalid_argument("malformed tridiagonal matrix");
  if (k < 1 || k > t.size()) throw std::invalid_argument("level count k must be in 1..n");
  const SturmData data = make_sturm_data(t);
  const auto [lo, hi] = gershgorin(t);
  std::vector<double> eig(static_cast<std::size_t>(k));
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < k; ++j) eig[j] = bisect_level(data, j, lo, hi);
  return eig;
}

std::vector<double> inverse_iteration(const Tridiagonal& t, double lambda) {
  const int n = t.size();
  const double tiny = 1e-14 * (std::abs(lambda) + 1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = 1.0 + static_cast<double>(i) / n;

  // Thomas elimination for (T - lambda I) y = x.
  std::vector<double> pivot(static_cast<std::size_t>(n));
  std::vector<double> upper(static_cast<std::size_t>(n));
  pivot[0] = t.diag[0] - lambda;
  if (std::abs(pivot[0]) < tiny) pivot[0] = tiny;
  for (int i = 1; i < n; ++i) {
    upper[i] = t.off[i - 1] / pivot[i - 1];
    pivot[i] = t.diag[i] - lambda - upper[i] * t.off[i - 1];
    if (std::abs(pivot[i]) < tiny) pivot[i] = tiny;
  }

  for (int iter = 0; iter < 4; ++iter) {
    for (int i = 1; i < n; ++i) x[i] -= upper[i] * x[i - 1];
    x[n - 1] /= pivot[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = (x[i] - t.off[i] * x[i + 1]) / pivot[i];
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
  return x;
}

Spectrum spectrum_fdm(const PotentialParams& p, int n_interior, int k, bool richardson) {
  validate(p);
  if (n_interior < kMinGridInterior) {
    throw std::invalid_argument("FDM grid needs at least " + std::to_string(kMinGridInterior) +
                                " interior nodes");
  }
  const GridSpec grid = GridSpec::for_potential(p, n_interior);
  const auto coarse = eigen_tridiag_smallest(assemble_tridiagonal(p, grid), k);
  const auto fine = eigen_tridiag_smallest(assemble_tridiagonal(p, grid.refined()), k);

  Spectrum out;
  out.method = Method::FDM;
  out.params = p;
  out.energies.resize(static_cast<std::size_t>(k));
  out.converged = true;
  for (int i = 0; i < k; ++i) {
    out.energies[i] = richardson ? (4.0 * fine[i] - coarse[i]) / 3.0 : coarse[i];
    const double change = std::abs(fine[i] - coarse[i]);
    out.est_error = std::max(out.est_error, change);
    if (change > 1e-4 * std::max(1.0, std::abs(out.energies[i]))) out.converged = false;
  }

  if (const auto* q = std::get_if<QuarticParams>(&p)) {
    const double wall = std::min(eval_quartic(*q, -q->L), eval_quartic(*q, q->L));
    if (wall - out.energies.back() < 10.0) {
      throw DomainTooSmall("quartic domain L = " + std::to_string(q->L) +
                           " too small: V(L) - E_k = " + std::to_string(wall - out.energies.back()) +
                           " < 10; increase L");
    }
  }
  return out;
}

Splitting splitting_fdm(const PotentialParams& p, int n_interior, bool richardson) {
  const Spectrum s = spectrum_fdm(p, n_interior, 2, richardson);
  return {s.energies[1] - s.energies[0], s.converged, s.est_error};
}

}  // namespace dwell
