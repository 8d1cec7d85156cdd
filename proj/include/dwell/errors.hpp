#pragma once

#include <stdexcept>

namespace dwell {

/// Argument outside the open interval where a potential or basis function is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative solver did not meet its stopping rule.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The truncated quartic domain [-L, L] is too narrow for the requested levels.
class DomainTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A basis truncation too small to hold the requested perturbation orders.
class TruncationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dwell
