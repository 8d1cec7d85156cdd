#include "dwell/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "dwell/fdm.hpp"
#include "dwell/perturb.hpp"
#include "dwell/potential.hpp"
#include "dwell/spectral.hpp"
#include "dwell/sweep_point.hpp"

namespace dwell {

void validate(const SweepConfig& config) {
  if (config.steps < 2) throw std::invalid_argument("sweep needs steps >= 2");
  if (!(config.alpha_min < config.alpha_max)) {
    throw std::invalid_argument("sweep needs alpha-min < alpha-max");
  }
  if (config.m < 0) throw std::invalid_argument("m must be non-negative");
}

double sweep_alpha(const SweepConfig& config, int i) {
  if (i == config.steps - 1) return config.alpha_max;
  return config.alpha_min + i * (config.alpha_max - config.alpha_min) / (config.steps - 1);
}

SweepRow compute_sweep_point(const SweepConfig& config, const std::vector<double>& series, double alpha) {
  SweepRow row{};
  row.alpha = alpha;
  row.barrier = characterize_symmetric({alpha, config.m}).barrier;
  if (config.method == Method::Spectral) {
    row.t = splitting_numeric(config.m, alpha, config.N).t;
  } else {
    row.t = splitting_fdm(SymWellParams{alpha, config.m}, config.grid, config.richardson).t;
  }
  row.t_series = evaluate_series(series, alpha);
  row.abs_diff = std::abs(row.t - row.t_series);
  return row;
}

SweepResult sweep(const SweepConfig& config) {
  validate(config);
  const auto series = splitting_series(config.m, 2, kDefaultBasisSize).R;
  const auto n = static_cast<std::size_t>(config.steps);
  std::vector<SweepRow> rows(n);
  std::vector<std::string> errors(n);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < config.steps; ++i) {
    try {
      rows[i] = compute_sweep_point(config, series, sweep_alpha(config, i));
    } catch (const std::exception& e) {
      errors[i] = e.what();
      if (errors[i].empty()) errors[i] = "numeric failure";
    }
  }

  SweepResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      result.failure = errors[i];
      break;
    }
    result.rows.push_back(rows[i]);
  }
  return result;
}

}  // namespace dwell
