#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cylrep {

/// Argument outside the region where a formula is defined (branch cut,
/// sector, regime, pole).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The function is unbounded at the requested point (e.g. Y at z = 0).
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Gamma evaluated exactly at a nonpositive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or quadrature did not reach its tolerance. Carries the best
/// estimate computed so far.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, std::complex<double> partial)
      : std::runtime_error(what), partial_(partial) {}

  std::complex<double> partial() const noexcept { return partial_; }

 private:
  std::complex<double> partial_;
};

}  // namespace cylrep
