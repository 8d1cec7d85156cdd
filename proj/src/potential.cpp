#include "dwell/potential.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dwell/errors.hpp"

namespace dwell {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_interior(double x) {
  if (!(x > 0.0 && x < kPi)) {
    throw DomainError("potential evaluated outside (0, pi) at x = " + std::to_string(x));
  }
}

}  // namespace

void validate(const SymWellParams& p) {
  if (p.m < 0) throw std::invalid_argument("m must be non-negative");
  if (!std::isfinite(p.alpha)) throw std::invalid_argument("alpha must be finite");
}

void validate(const AsymWellParams& p) {
  if (!std::isfinite(p.beta) || !std::isfinite(p.s)) {
    throw std::invalid_argument("beta and s must be finite");
  }
}

void validate(const QuarticParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.L)) {
    throw std::invalid_argument("quartic parameters must be finite");
  }
  if (p.b < 0.0) throw std::invalid_argument("quartic b must be >= 0");
  if (p.L <= 0.0) throw std::invalid_argument("quartic L must be > 0");
}

void validate(const PotentialParams& p) {
  std::visit([](const auto& q) { validate(q); }, p);
}

double eval_symmetric(const SymWellParams& p, double x) {
  require_interior(x);
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double centrifugal = static_cast<double>(p.m) * p.m - 0.25;
  return -0.25 - p.alpha * c * c + centrifugal / (s * s);
}

double eval_asymmetric(const AsymWellParams& p, double x) {
  require_interior(x);
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double shifted = p.m + p.s * c;
  return (shifted * shifted - 0.25) / (s * s) - p.beta * p.beta * c * c +
         2.0 * p.s * p.beta * c - 0.25 - p.s;
}

double eval_quartic(const QuarticParams& p, double x) {
  const double x2 = x * x;
  return -p.a * x2 + p.b * x2 * x2;
}

double evaluate(const PotentialParams& p, double x) {
  struct Visitor {
    double x;
    double operator()(const SymWellParams& q) const { return eval_symmetric(q, x); }
    double operator()(const AsymWellParams& q) const { return eval_asymmetric(q, x); }
    double operator()(const QuarticParams& q) const { return eval_quartic(q, x); }
  };
  return std::visit(Visitor{x}, p);
}

double derivative(const PotentialParams& p, double x) {
  struct Visitor {
    double x;
    double operator()(const SymWellParams& q) const {
      require_interior(x);
      const double c = std::cos(x);
      const double s = std::sin(x);
      const double centrifugal = static_cast<double>(q.m) * q.m - 0.25;
      return 2.0 * q.alpha * c * s - 2.0 * centrifugal * c / (s * s * s);
    }
    double operator()(const AsymWellParams& q) const {
      require_interior(x);
      const double c = std::cos(x);
      const double s = std::sin(x);
      const double shifted = q.m + q.s * c;
      const double num = shifted * shifted - 0.25;
      const double dnum = -2.0 * q.s * s * shifted;
      return dnum / (s * s) - 2.0 * num * c / (s * s * s) + 2.0 * q.beta * q.beta * c * s -
             2.0 * q.s * q.beta * s;
    }
    double operator()(const QuarticParams& q) const {
      return -2.0 * q.a * x + 4.0 * q.b * x * x * x;
    }
  };
  return std::visit(Visitor{x}, p);
}

Interval domain(const PotentialParams& p) {
  if (const auto* q = std::get_if<QuarticParams>(&p)) return {-q->L, q->L};
  return {0.0, kPi};
}

bool is_trigonometric(const PotentialParams& p) {
  return !std::holds_alternative<QuarticParams>(p);
}

std::string_view to_string(WellKind kind) {
  switch (kind) {
    case WellKind::DoubleWell: return "DoubleWell";
    case WellKind::SingleWell: return "SingleWell";
    case WellKind::InvertedDoubleWell: return "InvertedDoubleWell";
  }
  return "?";
}

std::string_view to_string(StationaryKind kind) {
  return kind == StationaryKind::Min ? "min" : "max";
}

WellShape characterize_symmetric(const SymWellParams& p) {
  validate(p);
  const double m2 = static_cast<double>(p.m) * p.m;
  const double centrifugal = m2 - 0.25;
  WellShape shape;

  if (p.m >= 1) {
    if (p.alpha > centrifugal) {
      // With u = sin^2 x, V = -1/4 - alpha (1 - u) + c/u has its minimum at u = sqrt(c/alpha).
      const double u = std::sqrt(centrifugal / p.alpha);
      const double x1 = std::asin(std::sqrt(u));
      shape.kind = WellKind::DoubleWell;
      shape.x_min = std::pair{x1, kPi - x1};
      shape.v_min = 2.0 * std::sqrt(p.alpha * centrifugal) - 0.25 - p.alpha;
      shape.v_max = m2 - 0.5;
      const double gap = std::sqrt(p.alpha) - std::sqrt(centrifugal);
      shape.barrier = gap * gap;
    } else {
      shape.kind = WellKind::SingleWell;
      shape.v_min = m2 - 0.5;
      shape.v_max = kInf;
    }
    return shape;
  }

  // m = 0: V -> -inf at both endpoints.
  if (p.alpha < -0.25) {
    const double root = std::sqrt(-p.alpha);
    const double x1 = std::asin(std::sqrt(0.5 / root));
    shape.kind = WellKind::InvertedDoubleWell;
    shape.x_max = std::pair{x1, kPi - x1};
    shape.v_min = -0.5;
    shape.v_max = -0.25 - p.alpha - root;
  } else {
    shape.kind = WellKind::SingleWell;
    shape.v_min = -kInf;
    shape.v_max = -0.5;
  }
  return shape;
}

std::vector<StationaryPoint> find_stationary_points(const PotentialParams& p, int grid_n) {
  validate(p);
  if (grid_n < 64) throw std::invalid_argument("stationary-point scan needs grid_n >= 64");

  const Interval dom = domain(p);
  const bool open = is_trigonometric(p);
  std::vector<double> xs(static_cast<std::size_t>(grid_n));
  for (int i = 0; i < grid_n; ++i) {
    xs[i] = open ? dom.lo + dom.length() * (i + 1) / (grid_n + 1)
                 : dom.lo + dom.length() * i / (grid_n - 1);
  }
  const double step = std::min(1e-5 * dom.length(), 0.25 * (xs[1] - xs[0]));
  auto num_derivative = [&](double x) {
    return (evaluate(p, x + step) - evaluate(p, x - step)) / (2.0 * step);
  };
  std::vector<double> d(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) d[i] = num_derivative(xs[i]);

  auto refine = [&](double lo, double hi) -> std::optional<double> {
    double dlo = derivative(p, lo);
    const double dhi = derivative(p, hi);
    if (dlo == 0.0) return lo;
    if (dhi == 0.0) return hi;
    if ((dlo < 0.0) == (dhi < 0.0)) return std::nullopt;
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
      mid = 0.5 * (lo + hi);
      const double dm = derivative(p, mid);
      if (std::abs(dm) <= 1e-10 || mid <= lo || mid >= hi) break;
      if ((dm < 0.0) == (dlo < 0.0)) {
        lo = mid;
        dlo = dm;
      } else {
        hi = mid;
      }
    }
    return mid;
  };

  const double curvature_step = std::min(1e-4 * dom.length(), 0.25 * (xs[1] - xs[0]));
  std::vector<StationaryPoint> points;
  auto classify = [&](double x) {
    const double v = evaluate(p, x);
    const double second =
        evaluate(p, x + curvature_step) - 2.0 * v + evaluate(p, x - curvature_step);
    points.push_back({x, v, second > 0.0 ? StationaryKind::Min : StationaryKind::Max});
  };

  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (d[i] == 0.0) {
      classify(xs[i]);
    } else if (d[i + 1] != 0.0 && (d[i] < 0.0) != (d[i + 1] < 0.0)) {
      if (auto root = refine(xs[i], xs[i + 1])) classify(*root);
    }
  }
  if (d.back() == 0.0) classify(xs.back());
  return points;
}

std::vector<StationaryPoint> characterize_asymmetric_numeric(const AsymWellParams& p,
                                                             int grid_n) {
  return find_stationary_points(PotentialParams{p}, grid_n);
}

std::vector<SamplePoint> sample(const PotentialParams& p, int n_points) {
  validate(p);
  const Interval dom = domain(p);
  std::vector<SamplePoint> rows;
  if (is_trigonometric(p)) {
    if (n_points < 1) throw std::invalid_argument("sample needs at least one point");
    rows.reserve(static_cast<std::size_t>(n_points));
    for (int i = 1; i <= n_points; ++i) {
      const double x = kPi * i / (n_points + 1);
      rows.push_back({x, evaluate(p, x)});
    }
  } else {
    if (n_points < 2) throw std::invalid_argument("quartic sample needs at least two points");
    rows.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
      const double x = dom.lo + dom.length() * i / (n_points - 1);
      rows.push_back({x, evaluate(p, x)});
    }
  }
  return rows;
}

}  // namespace dwell
