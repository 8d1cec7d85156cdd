#pragma once

#include <vector>

#include "dwell/sweep.hpp"

namespace dwell {

/// One sweep row from order-2 splitting coefficients; shared by the parallel
/// and serial sweeps.
SweepRow compute_sweep_point(const SweepConfig& config, const std::vector<double>& series,
                             double alpha);

}  // namespace dwell
