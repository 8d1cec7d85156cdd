#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwell/spectrum.hpp"

namespace dwell {

struct SweepConfig {
  int m = 2;
  double alpha_min = 0.0;
  double alpha_max = 1.0;
  int steps = 2;
  Method method = Method::Spectral;
  int N = 64;                // spectral truncation
  int grid = 4000;           // FDM interior nodes
  bool richardson = false;   // FDM only
};

struct SweepRow {
  double alpha;
  std::optional<double> barrier;  // present in the double-well regime
  double t;                       // numeric splitting
  double t_series;                // R0 + R1 alpha + R2 alpha^2
  double abs_diff;
};

struct SweepResult {
  std::vector<SweepRow> rows;     // in alpha order, up to the first failure
  std::optional<std::string> failure;
};

/// Throws std::invalid_argument unless steps >= 2 and alpha_min < alpha_max.
void validate(const SweepConfig& config);

/// alpha_i = alpha_min + i (alpha_max - alpha_min) / (steps - 1), endpoints exact.
double sweep_alpha(const SweepConfig& config, int i);

/// Points are evaluated in parallel; rows come back in alpha order.
SweepResult sweep(const SweepConfig& config);

}  // namespace dwell
