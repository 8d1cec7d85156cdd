#pragma once

#include <string_view>
#include <vector>

#include "dwell/potential.hpp"

namespace dwell {

enum class Method { Spectral, FDM };

std::string_view to_string(Method method);

/// Lowest eigenvalues, ascending, with a convergence flag and the size of the
/// change seen under refinement.
struct Spectrum {
  Method method = Method::Spectral;
  PotentialParams params;
  std::vector<double> energies;
  bool converged = false;
  double est_error = 0.0;
};

struct Splitting {
  double t = 0.0;
  bool converged = false;
  double est_error = 0.0;
};

}  // namespace dwell
