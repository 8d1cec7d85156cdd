#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dwell {

inline constexpr double kPi = 3.14159265358979323846;

/// Symmetric trigonometric well on (0, pi):
///   V(x) = -1/4 - alpha cos^2 x + (m^2 - 1/4) / sin^2 x
struct SymWellParams {
  double alpha = 0.0;
  int m = 0;
};

/// Asymmetric trigonometric well on (0, pi):
///   V(x) = ((m + s cos x)^2 - 1/4) / sin^2 x - beta^2 cos^2 x + 2 s beta cos x - 1/4 - s
struct AsymWellParams {
  double beta = 0.0;
  int m = 0;
  double s = 0.0;
};

/// Quartic well V(x) = -a x^2 + b x^4, truncated to [-L, L] for numerics.
struct QuarticParams {
  double a = 0.0;
  double b = 0.0;
  double L = 8.0;
};

using PotentialParams = std::variant<SymWellParams, AsymWellParams, QuarticParams>;

// Throw std::invalid_argument when an invariant is violated.
void validate(const SymWellParams& p);
void validate(const AsymWellParams& p);
void validate(const QuarticParams& p);
void validate(const PotentialParams& p);

/// Throws DomainError unless 0 < x < pi.
double eval_symmetric(const SymWellParams& p, double x);
/// Throws DomainError unless 0 < x < pi.
double eval_asymmetric(const AsymWellParams& p, double x);
double eval_quartic(const QuarticParams& p, double x);

double evaluate(const PotentialParams& p, double x);
/// Analytic dV/dx.
double derivative(const PotentialParams& p, double x);

struct Interval {
  double lo;
  double hi;
  double length() const { return hi - lo; }
};

/// (0, pi) for the trigonometric wells, [-L, L] for the quartic.
Interval domain(const PotentialParams& p);

bool is_trigonometric(const PotentialParams& p);

enum class WellKind { DoubleWell, SingleWell, InvertedDoubleWell };

std::string_view to_string(WellKind kind);

/// Shape of the symmetric well. Non-finite v_min / v_max denote the limits at
/// the singular endpoints when the extremum is not interior.
struct WellShape {
  WellKind kind = WellKind::SingleWell;
  std::optional<std::pair<double, double>> x_min;  // DoubleWell only
  std::optional<std::pair<double, double>> x_max;  // InvertedDoubleWell only
  double v_min = 0.0;
  double v_max = 0.0;
  std::optional<double> barrier;  // DoubleWell only
};

WellShape characterize_symmetric(const SymWellParams& p);

enum class StationaryKind { Min, Max };

std::string_view to_string(StationaryKind kind);

struct StationaryPoint {
  double x;
  double value;
  StationaryKind kind;
};

/// Interior stationary points of V, sorted by x. Candidates come from sign
/// changes of a central-difference derivative on a uniform grid of grid_n
/// points; each is refined by bisection on the analytic derivative until
/// |V'| <= 1e-10 and classified by the sign of the second difference.
std::vector<StationaryPoint> find_stationary_points(const PotentialParams& p, int grid_n);

std::vector<StationaryPoint> characterize_asymmetric_numeric(const AsymWellParams& p,
                                                             int grid_n);

struct SamplePoint {
  double x;
  double v;
};

/// Uniform samples. Trigonometric wells use interior points x_i = pi i/(n+1),
/// i = 1..n; the quartic uses n points spanning [-L, L] inclusive.
std::vector<SamplePoint> sample(const PotentialParams& p, int n_points);

}  // namespace dwell
