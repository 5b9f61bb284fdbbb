#pragma once

#include <stdexcept>
#include <string>

namespace abkm {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The scattered wave diverges on the interference line |theta| = pi.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Inputs are individually valid but inconsistent with each other
/// (mismatched lengths, an initial state that disagrees with its trajectories).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integration produced a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double t) : std::runtime_error(what), t_(t) {}
  double time() const noexcept { return t_; }

 private:
  double t_;
};

/// A root search could not proceed (e.g. no sign change on the bracket).
class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace abkm
