#pragma once

// Fourier coefficients of the 2pi-periodic kernel
//
//   Jk(theta) = (i^nu/2pi) e^{i nu (theta - pi sgn theta)} e^{iz cos theta} P(nu, -iz(1 - cos theta))
//
// whose l-th coefficient equals i^l J_{nu+l}(z) for l >= 0 and Re nu > -1/2.

#include "cylrep/config.hpp"
#include "cylrep/gamma.hpp"
#include "cylrep/quadrature.hpp"

namespace cylrep {

/// int_{-pi}^{pi} Jk(theta) e^{i l theta} dtheta.
inline QuadratureResult fourier_coefficient(cplx nu, long ell, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  if (!is_finite(nu) || !is_finite(z)) throw DomainError("fourier_coefficient: arguments must be finite");
  if (nu.real() <= -0.5) throw DomainError("fourier_coefficient: requires Re nu > -1/2");
  if (std::abs(z) > cfg.max_abs_z) throw DomainError("fourier_coefficient: |z| exceeds max_abs_z");
  const bool integer_nu = is_integer(nu);
  if (!integer_nu && z != cplx{0.0, 0.0} && on_negative_real_axis(z))
    throw DomainError("fourier_coefficient: z on the branch cut with non-integer nu");
  if (z == cplx{0.0, 0.0} && !integer_nu && nu.real() <= 0.0)
    throw DivergenceError("fourier_coefficient: kernel undefined at z = 0");

  const cplx pre = i_pow(nu) / (2.0 * kPi);
  const cplx minus_iz{z.imag(), -z.real()};
  const bool trivial = nu == cplx{0.0, 0.0};
  const cplx z_pow = (trivial || z == cplx{0.0, 0.0}) ? cplx{1.0, 0.0} : pow_rotated(z, nu);
  const double ld = static_cast<double>(ell);

  // side = +1 integrates theta in (0, pi], side = -1 integrates theta = -u.
  auto kernel = [&](double u, double side) -> cplx {
    const double theta = side * u;
    const double s = 2.0 * std::sin(0.5 * u) * std::sin(0.5 * u);
    cplx p{1.0, 0.0};
    if (!trivial) {
      if (z == cplx{0.0, 0.0}) {
        p = {0.0, 0.0};
      } else {
        // Non-integer nu leaves u^{2 nu} to integrate_power.
        const cplx power = integer_nu ? int_pow(s, static_cast<long>(nu.real()))
                                      : std::exp(nu * std::log(one_minus_cos_over_square(u)));
        p = z_pow * power * gamma_star(nu, minus_iz * s);
      }
    }
    return std::exp(kI * nu * (theta - kPi * side)) * std::exp(kI * z * std::cos(theta)) * p *
           std::exp(kI * ld * theta);
  };

  Tolerances tol = cfg.quad_tol;
  QuadratureResult right, left;
  if (trivial || integer_nu) {
    right = integrate([&](double u) { return kernel(u, 1.0); }, 0.0, kPi, tol);
    left = integrate([&](double u) { return kernel(u, -1.0); }, 0.0, kPi, tol);
  } else {
    right = integrate_power([&](double u) { return kernel(u, 1.0); }, kPi, 2.0 * nu, tol);
    left = integrate_power([&](double u) { return kernel(u, -1.0); }, kPi, 2.0 * nu, tol);
  }
  QuadratureResult out;
  out.value = pre * (right.value + left.value);
  out.error_estimate = std::abs(pre) * (right.error_estimate + left.error_estimate);
  out.nodes_used = right.nodes_used + left.nodes_used;
  out.converged = right.converged && left.converged;
  out.roundoff_limited = !out.converged && (right.converged || right.roundoff_limited) &&
                         (left.converged || left.roundoff_limited);
  return out;
}

}  // namespace cylrep
