#pragma once

#include <stdexcept>
#include <string>

namespace mmdg {

/// Invalid mesh / run configuration (bad bounds, v=0 not on an interface, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A moment vector that does not map to a physical fluid state (n <= 0 or
/// theta <= 0). Carries the location so a failing run can report where the
/// solution went bad.
class DomainError : public std::domain_error {
 public:
  DomainError(const std::string& what, double x = 0.0)
      : std::domain_error(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// Linear-algebra failure (singular factorization, incompatible Poisson data).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mmdg
