#pragma once

#include <vector>

namespace dwell {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Shared 200-node rule on (0, pi) used for every basis integral.
const QuadratureRule& basis_quadrature();

inline constexpr int kBasisQuadratureNodes = 200;

}  // namespace dwell
