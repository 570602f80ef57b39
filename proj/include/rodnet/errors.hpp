#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rodnet {

/// Precondition violation on a physical or numerical domain.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Shape tensor is singular or indefinite (order tensor on the admissible
/// boundary, or eigenvalues below the SPD threshold).
struct SingularShapeError : DomainError {
  explicit SingularShapeError(const std::string& what) : DomainError(what) {}
};

/// Equilibrium solve found no usable critical point. Carries a coarse dump
/// of the derivative grid for diagnosis.
struct SolverFailure : std::runtime_error {
  std::vector<double> grid_s;
  std::vector<double> grid_dE;

  SolverFailure(const std::string& what, std::vector<double> s, std::vector<double> dE)
      : std::runtime_error(what), grid_s(std::move(s)), grid_dE(std::move(dE)) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rodnet
