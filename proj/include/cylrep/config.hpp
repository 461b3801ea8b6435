#pragma once

#include <cstddef>
#include <string>

#include "cylrep/complex_math.hpp"

namespace cylrep {

/// Error control for the adaptive quadrature engine.
struct Tolerances {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  std::size_t max_nodes = 4096;
};

/// Knobs shared by every evaluator. Immutable per call.
struct EvalConfig {
  Tolerances quad_tol{};
  /// Half-width of the near-integer / near-half-integer bands.
  double switch_epsilon = 1e-6;
  /// Largest |z| accepted by the integral representations.
  double max_abs_z = 30.0;
  /// Verify square-root and power consistency at runtime.
  bool branch_check = true;
  /// Largest |m| accepted in finite sums (Y/H integer order, spherical order).
  int max_sum_order = 30;

  void validate() const {
    if (!(switch_epsilon > 0.0 && switch_epsilon < 0.1))
      throw DomainError("switch_epsilon must lie in (0, 0.1)");
    if (!(max_abs_z > 0.0)) throw DomainError("max_abs_z must be positive");
    if (!(quad_tol.abs_tol >= 0.0 && quad_tol.rel_tol >= 0.0))
      throw DomainError("quadrature tolerances must be nonnegative");
  }
};

/// Value plus error estimate plus the name of the formula path that produced it.
struct EvalResult {
  cplx value{};
  double error_estimate = 0.0;
  std::string trace;
  std::size_t nodes = 0;
};

}  // namespace cylrep
