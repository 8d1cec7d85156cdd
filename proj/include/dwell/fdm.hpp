#pragma once

#include <functional>
#include <vector>

#include "dwell/potential.hpp"
#include "dwell/spectrum.hpp"

namespace dwell {

/// Uniform Dirichlet grid: n_interior nodes strictly inside [lo, hi].
struct GridSpec {
  int n_interior = 0;
  double lo = 0.0;
  double hi = kPi;

  double h() const { return (hi - lo) / (n_interior + 1); }
  double node(int i) const { return lo + (i + 1) * h(); }
  /// Same interval with the spacing halved (2n + 1 interior nodes).
  GridSpec refined() const { return {2 * n_interior + 1, lo, hi}; }

  static GridSpec for_potential(const PotentialParams& p, int n_interior);
};

inline constexpr int kMinGridInterior = 16;
inline constexpr int kDefaultGridInterior = 4000;

/// Symmetric tridiagonal matrix; off has size diag.size() - 1.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
  int size() const { return static_cast<int>(diag.size()); }
};

/// Three-point discretization of -d^2/dx^2 + V on the grid:
/// diag[i] = 2/h^2 + V(x_i), off[i] = -1/h^2. V is evaluated in parallel and
/// must be safe to call concurrently.
Tridiagonal assemble_tridiagonal(const std::function<double(double)>& v, const GridSpec& grid);
Tridiagonal assemble_tridiagonal(const PotentialParams& p, const GridSpec& grid);

/// Number of eigenvalues strictly below x (Sturm sequence sign count).
int sturm_count(const Tridiagonal& t, double x);

inline constexpr double kBisectionTolerance = 1e-12;

/// k smallest eigenvalues, ascending, by bisection on Sturm counts inside the
/// Gershgorin interval. Each eigenvalue is bracketed independently, in parallel.
std::vector<double> eigen_tridiag_smallest(const Tridiagonal& t, int k);

/// Unit-norm eigenvector for an eigenvalue estimate lambda (inverse iteration).
std::vector<double> inverse_iteration(const Tridiagonal& t, double lambda);

/// Lowest k levels. With richardson, E = (4 E(h/2) - E(h)) / 3; otherwise E(h).
/// est_error = max |E(h/2) - E(h)|; converged iff that is at most 1e-4 relative.
/// For the quartic, throws DomainTooSmall unless min V(+-L) exceeds the k-th
/// level by at least 10.
Spectrum spectrum_fdm(const PotentialParams& p, int n_interior, int k, bool richardson);

/// t = E_1 - E_0 from spectrum_fdm.
Splitting splitting_fdm(const PotentialParams& p, int n_interior, bool richardson);

}  // namespace dwell
