#include "dwell/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dwell/errors.hpp"
#include "dwell/potential.hpp"
#include "dwell/quadrature.hpp"

namespace dwell {

void validate(const BasisSpec& spec) {
  if (spec.m < 0) throw std::invalid_argument("basis m must be non-negative");
  if (spec.N < 4) throw std::invalid_argument("basis truncation N must be >= 4");
}

double unperturbed_energy(int n, int m) {
  const double shifted = n + m + 0.5;
  return shifted * shifted - 0.25;
}

double gegenbauer(int n, double lambda, double u) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * lambda * u;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * (k + lambda) * u * curr - (k + 2.0 * lambda - 1.0) * prev) / (k + 1);
    prev = curr;
    curr = next;
  }
  return curr;
}

double basis_norm(int n, int m) {
  const double lambda = m + 0.5;
  const QuadratureRule& rule = basis_quadrature();
  double integral = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double x = rule.nodes[q];
    const double g = gegenbauer(n, lambda, std::cos(x));
    integral += rule.weights[q] * std::pow(std::sin(x), 2.0 * lambda) * g * g;
  }
  return 1.0 / std::sqrt(integral);
}

namespace {

double unnormalized(int n, double lambda, double x) {
  if (!(x > 0.0 && x < kPi)) {
    throw DomainError("basis function evaluated outside (0, pi) at x = " + std::to_string(x));
  }
  return std::pow(std::sin(x), lambda) * gegenbauer(n, lambda, std::cos(x));
}

}  // namespace

double eval_basis_function(int n, int m, double x) {
  if (n < 0 || m < 0) throw std::invalid_argument("basis index and m must be non-negative");
  return basis_norm(n, m) * unnormalized(n, m + 0.5, x);
}

double cos_offdiag(int n, int m) {
  const double lambda = m + 0.5;
  return std::sqrt((n + 1.0) * (n + 2.0 * lambda) / (4.0 * (n + lambda) * (n + lambda + 1.0)));
}

double cos2_element(int i, int j, int m) {
  if (i == j) {
    const double below = i > 0 ? cos_offdiag(i - 1, m) : 0.0;
    const double above = cos_offdiag(i, m);
    return below * below + above * above;
  }
  if (std::abs(i - j) == 2) {
    const int k = std::min(i, j);
    return cos_offdiag(k, m) * cos_offdiag(k + 1, m);
  }
  return 0.0;
}

Basis::Basis(BasisSpec spec) : spec_(spec) {
  validate(spec_);
  norms_.resize(static_cast<std::size_t>(spec_.N));
#pragma omp parallel for schedule(static)
  for (int n = 0; n < spec_.N; ++n) norms_[n] = basis_norm(n, spec_.m);
}

double Basis::operator()(int n, double x) const {
  return norm(n) * unnormalized(n, spec_.lambda(), x);
}

std::vector<std::vector<double>> Basis::tabulate(const std::vector<double>& x) const {
  std::vector<std::vector<double>> table(static_cast<std::size_t>(spec_.N),
                                         std::vector<double>(x.size()));
#pragma omp parallel for schedule(static)
  for (int n = 0; n < spec_.N; ++n) {
    for (std::size_t q = 0; q < x.size(); ++q) table[n][q] = (*this)(n, x[q]);
  }
  return table;
}

DenseTable quadrature_matrix(int m, int count, const std::function<double(double)>& f) {
  const Basis basis({m, std::max(count, 4)});
  const QuadratureRule& rule = basis_quadrature();
  const auto psi = basis.tabulate(rule.nodes);
  std::vector<double> weighted(rule.nodes.size());
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) weighted[q] = rule.weights[q] * f(rule.nodes[q]);

  DenseTable out{count, std::vector<double>(static_cast<std::size_t>(count) * count)};
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      double sum = 0.0;
      for (std::size_t q = 0; q < weighted.size(); ++q) sum += weighted[q] * psi[i][q] * psi[j][q];
      out.values[static_cast<std::size_t>(i) * count + j] = sum;
    }
  }
  return out;
}

DenseTable gram_matrix(int m, int count) {
  return quadrature_matrix(m, count, [](double) { return 1.0; });
}

}  // namespace dwell
