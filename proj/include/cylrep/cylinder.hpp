#pragma once

// Cylinder functions of arbitrary complex order through the mixed
// integral-plus-finite-sum representations:
//
//   J_mu(z) = B_mu(z) + chi_mu(z)
//   B_mu(z) = (i^mu/pi) int_0^pi e^{-iz cos t} P({mu}, -iz(1+cos t)) cos(mu t) dt
//
// where chi_mu is a finite sum of powers of z that is nonzero only for
// Re mu <= -1/2 and mu not an integer. Y, H1, H2, I, K and the z-derivatives
// are assembled from the same two pieces.
//
// Branch convention: every power of (-i c z) is taken as
// exp(a (Log z + ln c - i pi/2)) with the principal Log z, so each function
// has its cut on the negative real z axis only.
//
// The integrals are evaluated in t' = pi - t, the distance from the endpoint
// where (1 + cos t) vanishes, so that the algebraic factor (1+cos t)^{{mu}}
// is computed without cancellation.

#include <cmath>
#include <string>

#include "cylrep/config.hpp"
#include "cylrep/gamma.hpp"
#include "cylrep/order.hpp"
#include "cylrep/quadrature.hpp"

namespace cylrep {

namespace detail {

inline void check_argument(cplx z, const EvalConfig& cfg, bool needs_slit, const char* what) {
  if (!is_finite(z)) throw DomainError(std::string(what) + ": z must be finite");
  if (std::abs(z) > cfg.max_abs_z)
    throw DomainError(std::string(what) + ": |z| exceeds the configured cap max_abs_z");
  if (needs_slit && z != cplx{0.0, 0.0} && on_negative_real_axis(z))
    throw DomainError(std::string(what) + ": z on the branch cut (-inf, 0] with non-integer order");
  if (cfg.branch_check && z != cplx{0.0, 0.0}) {
    const cplx back = std::exp(log_rotated(z, 2.0));
    const cplx expect = cplx{0.0, -2.0} * z;
    if (std::abs(back - expect) > 1e-12 * std::abs(expect))
      throw DomainError(std::string(what) + ": branch consistency check failed for (-2iz)");
  }
}

/// 2 sin^2(t/2) = 1 - cos t, exact near t = 0.
inline double one_minus_cos(double t) {
  const double s = std::sin(0.5 * t);
  return 2.0 * s * s;
}

inline void quad_or_throw(const QuadratureResult& q, const char* what, cplx scale) {
  if (!q.converged && !q.roundoff_limited)
    throw AccuracyError(std::string(what) + ": quadrature did not converge", scale * q.value);
}

struct Part {
  cplx value{};
  double error = 0.0;
  std::size_t nodes = 0;
};

/// (i^{mu-k}/pi) int_0^pi e^{-iz cos th} P({mu}, -iz(1+cos th)) (cos th)^k cos(mu th) dth.
/// k = 0 is B_mu(z).
inline Part b_integral_power(cplx mu, cplx z, int k, const EvalConfig& cfg) {
  const OrderDecomposition d = decompose(mu, cfg);
  const cplx nu = d.fractional_part;
  const bool smooth = nu == cplx{0.0, 0.0};

  if (z == cplx{0.0, 0.0} && !smooth) {
    if (nu.real() > 0.0) return {};
    throw DivergenceError("B_mu(z) diverges at z = 0 for Re{mu} <= 0, {mu} != 0");
  }

  // i^mu (-iz)^nu = i^<Re mu> z^nu on the continued branch.
  const cplx prefactor = i_pow(d.integral_part - k) * (smooth ? cplx{1.0, 0.0} : principal_pow(z, nu)) / kPi;
  const cplx minus_iz{z.imag(), -z.real()};

  // Integrand over t^{2 nu}, where t = pi - th and (1 + cos th)^nu = t^{2 nu} (1 - cos t)^nu / t^{2 nu}.
  auto integrand = [&](double t) -> cplx {
    const double ct = std::cos(t);
    cplx v = std::exp(kI * z * ct) * cos_mu_pi_minus(mu, t);
    if (!smooth)
      v *= std::exp(nu * std::log(one_minus_cos_over_square(t))) * gamma_star(nu, minus_iz * one_minus_cos(t));
    if (k != 0) v *= std::pow(-ct, k);
    return v;
  };

  const QuadratureResult q = smooth ? integrate(integrand, 0.0, kPi, cfg.quad_tol)
                                    : integrate_power(integrand, kPi, 2.0 * nu, cfg.quad_tol);
  quad_or_throw(q, "B integral", prefactor);
  return {prefactor * q.value, std::abs(prefactor) * q.error_estimate, q.nodes_used};
}

}  // namespace detail

/// B_mu(z), the integral term present for every order.
inline EvalResult b_integral(cplx mu, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  const OrderDecomposition d = decompose(mu, cfg);
  detail::check_argument(z, cfg, d.kind != OrderKind::Integer, "B_mu(z)");
  const auto part = detail::b_integral_power(mu, z, 0, cfg);
  return {part.value, part.error, std::string("integral/") + std::string(to_string(d.kind)), part.nodes};
}

/// chi_mu(z), the finite corrective sum. Exactly zero for Re mu > -1/2 and
/// for integer mu.
inline EvalResult corrective_chi(cplx mu, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  const OrderDecomposition d = decompose(mu, cfg);
  if (mu.real() > -0.5 || d.kind == OrderKind::Integer) return {{0.0, 0.0}, 0.0, "corrective/zero", 0};
  detail::check_argument(z, cfg, true, "chi_mu(z)");
  if (z == cplx{0.0, 0.0}) throw DivergenceError("chi_mu(z) diverges at z = 0 for Re mu <= -1/2");

  const long terms = -d.integral_part;
  if (terms > cfg.max_sum_order) throw DomainError("chi_mu(z): |<Re mu>| exceeds max_sum_order");

  cplx sum{};
  double magnitude = 0.0;
  if (d.kind == OrderKind::HalfInteger) {
    // Limiting form at mu = m + 1/2, m <= -1.
    const long m = d.integral_part;
    for (long j = 1; j <= -m; ++j) {
      const double coeff = std::exp(std::lgamma(static_cast<double>(j - m - 1)) -
                                    std::lgamma(static_cast<double>(j)) -
                                    std::lgamma(static_cast<double>(-j - m + 1)));
      const cplx term = coeff * pow_rotated(z, cplx{0.5 - static_cast<double>(j), 0.0}, 2.0);
      sum += term;
      magnitude += std::abs(term);
    }
    const cplx prefactor = 2.0 / kSqrtPi * std::exp(cplx{0.0, -kPi / 2.0} * (static_cast<double>(m) + 1.5)) *
                           std::exp(kI * z);
    return {prefactor * sum, 10.0 * kEps * std::abs(prefactor) * magnitude, "corrective.3/half-integer", 0};
  }

  for (long j = 1; j <= terms; ++j) {
    const double jd = static_cast<double>(j);
    const cplx ratio = gamma_ratio({jd + mu - 0.5, jd + 2.0 * mu});
    const cplx term = ratio * reciprocal_gamma(jd) * pow_rotated(z, jd + mu - 1.0, 2.0);
    sum += term;
    magnitude += std::abs(term);
  }
  const cplx prefactor = i_pow(mu) / kSqrtPi * std::exp(kI * z);
  return {prefactor * sum, 10.0 * kEps * std::abs(prefactor) * magnitude,
          std::string("corrective/") + std::string(to_string(d.kind)), 0};
}

/// J_mu(z) for any complex order. Non-integer orders need z off (-inf, 0].
inline EvalResult bessel_j(cplx mu, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  const OrderDecomposition d = decompose(mu, cfg);
  detail::check_argument(z, cfg, d.kind != OrderKind::Integer, "J_mu(z)");
  if (z == cplx{0.0, 0.0}) {
    if (d.kind == OrderKind::Integer) return {{mu == cplx{0.0, 0.0} ? 1.0 : 0.0, 0.0}, 0.0, "limit/z=0", 0};
    if (mu.real() > 0.0) return {{0.0, 0.0}, 0.0, "limit/z=0", 0};
    throw DivergenceError("J_mu(z) divergent at z=0 for Re mu <= 0, mu not an integer");
  }
  const auto b = detail::b_integral_power(mu, z, 0, cfg);
  if (d.kind == OrderKind::Integer) return {b.value, b.error, "JI/integer", b.nodes};
  const EvalResult chi = corrective_chi(mu, z, cfg);
  std::string trace = (chi.trace == "corrective.3/half-integer")
                          ? chi.trace
                          : std::string("rep2.0/") + std::string(to_string(d.kind));
  return {b.value + chi.value, b.error + chi.error_estimate, trace, b.nodes};
}

/// I_mu(z) through the real-kernel form, for -pi < arg z <= pi/2.
inline EvalResult bessel_i(cplx mu, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  const OrderDecomposition d = decompose(mu, cfg);
  const bool integer = d.kind == OrderKind::Integer;
  detail::check_argument(z, cfg, !integer, "I_mu(z)");
  if (!integer && z != cplx{0.0, 0.0} && std::arg(z) > kPi / 2.0)
    throw DomainError("I_mu(z): arg z outside the sector (-pi, pi/2]");
  if (z == cplx{0.0, 0.0}) {
    if (integer) return {{mu == cplx{0.0, 0.0} ? 1.0 : 0.0, 0.0}, 0.0, "limit/z=0", 0};
    if (mu.real() > 0.0) return {{0.0, 0.0}, 0.0, "limit/z=0", 0};
    throw DivergenceError("I_mu(z) divergent at z=0 for Re mu <= 0, mu not an integer");
  }

  const cplx nu = d.fractional_part;
  const bool smooth = nu == cplx{0.0, 0.0};
  const cplx prefactor = (smooth ? cplx{1.0, 0.0} : principal_pow(z, nu)) / kPi;
  auto integrand = [&](double t) -> cplx {
    cplx v = std::exp(-z * std::cos(t)) * cos_mu_pi_minus(mu, t);
    if (!smooth)
      v *= std::exp(nu * std::log(one_minus_cos_over_square(t))) * gamma_star(nu, z * detail::one_minus_cos(t));
    return v;
  };
  const QuadratureResult q = smooth ? integrate(integrand, 0.0, kPi, cfg.quad_tol)
                                    : integrate_power(integrand, kPi, 2.0 * nu, cfg.quad_tol);
  detail::quad_or_throw(q, "I_mu(z)", prefactor);
  cplx value = prefactor * q.value;
  double err = std::abs(prefactor) * q.error_estimate;

  if (mu.real() <= -0.5 && !integer) {
    const long terms = -d.integral_part;
    if (terms > cfg.max_sum_order) throw DomainError("I_mu(z): |<Re mu>| exceeds max_sum_order");
    cplx sum{};
    double magnitude = 0.0;
    const cplx log2z = principal_log(2.0 * z);
    for (long j = 1; j <= terms; ++j) {
      const double jd = static_cast<double>(j);
      const cplx term = gamma_ratio({jd + mu - 0.5, jd + 2.0 * mu}) * reciprocal_gamma(jd) *
                        std::exp((jd + mu - 1.0) * log2z);
      sum += term;
      magnitude += std::abs(term);
    }
    const cplx pre = std::exp(-z) / kSqrtPi;
    value += pre * sum;
    err += 10.0 * kEps * std::abs(pre) * magnitude;
  }
  return {value, err, std::string("modiI/") + std::string(to_string(d.kind)), q.nodes_used};
}

/// sigma_m(z), the finite sum of the integer-order Y and Hankel formulas.
inline cplx sigma_sum(long m, cplx z) {
  if (m == 0) return {0.0, 0.0};
  if (z == cplx{0.0, 0.0}) throw DivergenceError("sigma_m(z) diverges at z = 0");
  const long am = std::abs(m);
  const cplx two_iz{-2.0 * z.imag(), 2.0 * z.real()};
  cplx sum{};
  for (long j = 1; j <= am; ++j) {
    const double jd = static_cast<double>(j);
    const double coeff = std::tgamma(0.5 - jd) *
                         std::exp(std::lgamma(jd + am) - std::lgamma(static_cast<double>(am - j + 1)));
    sum += coeff * int_pow(two_iz, -j);
  }
  return sign_pow(m) / kSqrtPi * std::exp(kI * z) * sum;
}

namespace detail {

/// (1/pi) int_0^pi e^{-iz cos th} [Gamma(0, -iz(1+cos th)) - shift] cos(m th) dth.
inline Part upper_gamma_integral(long m, cplx z, cplx shift, const EvalConfig& cfg) {
  const cplx minus_iz{z.imag(), -z.real()};
  const cplx log_minus_iz = log_rotated(z);
  const double md = static_cast<double>(m);
  auto integrand = [&](double t) -> cplx {
    const double ct = std::cos(t);
    const double s2 = one_minus_cos(t);
    const cplx e1 = upper_gamma_zero_log(minus_iz * s2, log_minus_iz + log_one_minus_cos(t));
    return std::exp(kI * z * ct) * (e1 - shift) * std::cos(md * (kPi - t));
  };
  const QuadratureResult q = integrate_graded(integrand, kPi, 0.0, cfg.quad_tol);
  quad_or_throw(q, "Gamma(0, .) integral", cplx{1.0 / kPi, 0.0});
  return {q.value / kPi, q.error_estimate / kPi, q.nodes_used};
}

inline void check_integer_order(long m, cplx z, const EvalConfig& cfg, const char* what) {
  check_argument(z, cfg, true, what);
  if (z == cplx{0.0, 0.0}) throw DivergenceError(std::string(what) + ": divergent at z=0");
  if (std::abs(m) > cfg.max_sum_order) throw DomainError(std::string(what) + ": |m| exceeds max_sum_order");
}

/// Model error of evaluating a near-integer order at the integer itself.
inline double near_integer_error(cplx mu, long m, cplx value, cplx z) {
  const double delta = std::abs(mu - cplx{static_cast<double>(m), 0.0});
  return delta * (1.0 + std::abs(value)) * (kPi + std::abs(std::log(std::abs(z))));
}

struct GenericParts {
  Part b_plus, b_minus;
  EvalResult chi;
  cplx sin_mu, cos_mu;
  OrderDecomposition d;
};

inline GenericParts generic_parts(cplx mu, cplx z, const EvalConfig& cfg) {
  GenericParts g;
  g.d = decompose(mu, cfg);
  g.b_plus = b_integral_power(mu, z, 0, cfg);
  g.b_minus = b_integral_power(-mu, z, 0, cfg);
  g.chi = corrective_chi(-mu * order_sign(mu), z, cfg);
  g.sin_mu = sin_pi(mu);
  g.cos_mu = cos_pi(mu);
  return g;
}

inline void check_generic(cplx z, const EvalConfig& cfg, const char* what) {
  check_argument(z, cfg, true, what);
  if (z == cplx{0.0, 0.0}) throw DivergenceError(std::string(what) + ": divergent at z=0");
}

}  // namespace detail

/// S(mu): cos(mu pi) for Re mu < 0, -1 otherwise.
inline cplx neumann_sign_factor(cplx mu) { return mu.real() < 0.0 ? cos_pi(mu) : cplx{-1.0, 0.0}; }
/// T-(mu): e^{-i mu pi} for Re mu < 0, -1 otherwise.
inline cplx hankel1_sign_factor(cplx mu) {
  return mu.real() < 0.0 ? std::exp(-kI * kPi * mu) : cplx{-1.0, 0.0};
}
/// T+(mu): e^{i mu pi} for Re mu < 0, -1 otherwise.
inline cplx hankel2_sign_factor(cplx mu) {
  return mu.real() < 0.0 ? std::exp(kI * kPi * mu) : cplx{-1.0, 0.0};
}

/// Y_m(z) for integer m.
inline EvalResult bessel_y_integer(long m, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  detail::check_integer_order(m, z, cfg, "Y_m(z)");
  const auto integral = detail::upper_gamma_integral(m, z, cplx{0.0, kPi / 2.0}, cfg);
  const cplx pre = -2.0 * i_pow(m) / kPi;
  const cplx value = pre * (integral.value + sigma_sum(m, z));
  return {value, std::abs(pre) * integral.error + 1e-15 * std::abs(value), "Yint.10/integer", integral.nodes};
}

/// Y_mu(z) for any complex order; integer and near-integer orders go
/// through the integer formula.
inline EvalResult bessel_y(cplx mu, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  const OrderDecomposition d = decompose(mu, cfg);
  if (d.kind == OrderKind::Integer || d.kind == OrderKind::NearInteger) {
    const long m = static_cast<long>(std::round(mu.real()));
    EvalResult r = bessel_y_integer(m, z, cfg);
    if (d.kind == OrderKind::NearInteger) {
      r.error_estimate += detail::near_integer_error(mu, m, r.value, z);
      r.trace = "Yint.10/near-integer";
    }
    return r;
  }
  detail::check_generic(z, cfg, "Y_mu(z)");
  const auto g = detail::generic_parts(mu, z, cfg);
  const cplx integral = (g.b_plus.value * g.cos_mu - g.b_minus.value) / g.sin_mu;
  const cplx value = integral + neumann_sign_factor(mu) * g.chi.value / g.sin_mu;
  const double err =
      (std::abs(g.cos_mu) * g.b_plus.error + g.b_minus.error + g.chi.error_estimate) / std::abs(g.sin_mu);
  return {value, err, std::string("Y3b/") + std::string(to_string(d.kind)), g.b_plus.nodes + g.b_minus.nodes};
}

/// H1_mu(z).
inline EvalResult hankel1(cplx mu, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  const OrderDecomposition d = decompose(mu, cfg);
  if (d.kind == OrderKind::Integer || d.kind == OrderKind::NearInteger) {
    const long m = static_cast<long>(std::round(mu.real()));
    detail::check_integer_order(m, z, cfg, "H1_m(z)");
    const auto integral = detail::upper_gamma_integral(m, z, {}, cfg);
    const cplx pre = 2.0 * i_pow(m - 1) / kPi;
    const cplx value = pre * (integral.value + sigma_sum(m, z));
    EvalResult r{value, std::abs(pre) * integral.error + 1e-15 * std::abs(value), "Yint.12.bis/integer",
                 integral.nodes};
    if (d.kind == OrderKind::NearInteger) {
      r.error_estimate += detail::near_integer_error(mu, m, value, z);
      r.trace = "Yint.12.bis/near-integer";
    }
    return r;
  }
  detail::check_generic(z, cfg, "H1_mu(z)");
  const auto g = detail::generic_parts(mu, z, cfg);
  const cplx rot = std::exp(-kI * kPi * mu);
  const cplx integral = (rot * g.b_plus.value - g.b_minus.value) / g.sin_mu;
  const cplx value = kI * (integral + hankel1_sign_factor(mu) * g.chi.value / g.sin_mu);
  const double err =
      (std::abs(rot) * g.b_plus.error + g.b_minus.error + std::abs(rot) * g.chi.error_estimate) /
      std::abs(g.sin_mu);
  return {value, err, std::string("H3b/") + std::string(to_string(d.kind)), g.b_plus.nodes + g.b_minus.nodes};
}

/// H2_mu(z).
inline EvalResult hankel2(cplx mu, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  const OrderDecomposition d = decompose(mu, cfg);
  if (d.kind == OrderKind::Integer || d.kind == OrderKind::NearInteger) {
    const long m = static_cast<long>(std::round(mu.real()));
    detail::check_integer_order(m, z, cfg, "H2_m(z)");
    const auto integral = detail::upper_gamma_integral(m, z, cplx{0.0, kPi}, cfg);
    const cplx pre = -2.0 * i_pow(m - 1) / kPi;
    const cplx value = pre * (integral.value + sigma_sum(m, z));
    EvalResult r{value, std::abs(pre) * integral.error + 1e-15 * std::abs(value), "H2.4.bis/integer",
                 integral.nodes};
    if (d.kind == OrderKind::NearInteger) {
      r.error_estimate += detail::near_integer_error(mu, m, value, z);
      r.trace = "H2.4.bis/near-integer";
    }
    return r;
  }
  detail::check_generic(z, cfg, "H2_mu(z)");
  const auto g = detail::generic_parts(mu, z, cfg);
  const cplx rot = std::exp(kI * kPi * mu);
  const cplx integral = (rot * g.b_plus.value - g.b_minus.value) / g.sin_mu;
  const cplx value = -kI * (integral + hankel2_sign_factor(mu) * g.chi.value / g.sin_mu);
  const double err =
      (std::abs(rot) * g.b_plus.error + g.b_minus.error + std::abs(rot) * g.chi.error_estimate) /
      std::abs(g.sin_mu);
  return {value, err, std::string("H2.3b/") + std::string(to_string(d.kind)), g.b_plus.nodes + g.b_minus.nodes};
}

enum class KBranch { Auto, ViaHankel1, ViaHankel2 };

/// K_mu(z) from H1_mu(iz) when -pi < arg z <= pi/2 and from H2_mu(-iz) when
/// -pi/2 < arg z <= pi. Auto picks H1 for arg z <= 0, which keeps iz off
/// the cut of the Hankel functions.
inline EvalResult bessel_k(cplx mu, cplx z, const EvalConfig& cfg = {}, KBranch branch = KBranch::Auto) {
  cfg.validate();
  if (!is_finite(mu)) throw DomainError("K_mu(z): order must be finite");
  if (!is_finite(z)) throw DomainError("K_mu(z): z must be finite");
  if (z == cplx{0.0, 0.0}) throw DivergenceError("K_mu(z): divergent at z=0");
  const double arg = on_negative_real_axis(z) ? kPi : std::arg(z);
  if (branch == KBranch::Auto) branch = arg <= 0.0 ? KBranch::ViaHankel1 : KBranch::ViaHankel2;
  if (branch == KBranch::ViaHankel1) {
    if (!(arg > -kPi && arg <= kPi / 2.0)) throw DomainError("K_mu(z): arg z outside (-pi, pi/2] for the H1 branch");
    EvalResult h = hankel1(mu, kI * z, cfg);
    const cplx pre = kPi / 2.0 * i_pow(mu + 1.0);
    return {pre * h.value, std::abs(pre) * h.error_estimate, "K/" + h.trace, h.nodes};
  }
  if (!(arg > -kPi / 2.0 && arg <= kPi)) throw DomainError("K_mu(z): arg z outside (-pi/2, pi] for the H2 branch");
  EvalResult h = hankel2(mu, -kI * z, cfg);
  const cplx pre = kPi / 2.0 * std::exp(-kI * (kPi / 2.0) * (mu + 1.0));
  return {pre * h.value, std::abs(pre) * h.error_estimate, "K/" + h.trace, h.nodes};
}

/// c_mu = int_0^pi (cos t)^{<Re mu>} (1 + cos t)^{{mu}} cos(mu t) dt for
/// <Re mu> >= 0, by quadrature. Equals pi / 2^mu.
inline QuadratureResult c_mu_integral(cplx mu, const EvalConfig& cfg = {}) {
  const OrderDecomposition d = decompose(mu, cfg);
  if (d.integral_part < 0) throw DomainError("c_mu: requires <Re mu> >= 0");
  const cplx nu = d.fractional_part;
  auto integrand = [&](double t) -> cplx {
    return std::pow(-std::cos(t), static_cast<int>(d.integral_part)) *
           std::exp(nu * std::log(one_minus_cos_over_square(t))) * cos_mu_pi_minus(mu, t);
  };
  return integrate_power(integrand, kPi, 2.0 * nu, cfg.quad_tol);
}

/// n-th z-derivative of J_mu(z).
inline EvalResult bessel_j_derivative(cplx mu, cplx z, int n, const EvalConfig& cfg = {}) {
  cfg.validate();
  if (n < 0) throw DomainError("derivative order must be nonnegative");
  if (n == 0) return bessel_j(mu, z, cfg);
  const OrderDecomposition d = decompose(mu, cfg);
  const bool integer = d.kind == OrderKind::Integer;
  detail::check_argument(z, cfg, !integer, "J_mu^(n)(z)");
  if (z == cplx{0.0, 0.0} && !integer)
    throw DomainError("J_mu^(n)(z): z = 0 only supported for integer order");
  const auto integral = detail::b_integral_power(mu, z, n, cfg);
  cplx value = integral.value;
  double err = integral.error;
  if (d.integral_part < n && !integer) {
    double binom = 1.0;
    cplx sum{};
    for (int j = 0; j <= n; ++j) {
      const EvalResult chi = corrective_chi(mu - static_cast<double>(n) + 2.0 * j, z, cfg);
      sum += sign_pow(j) * binom * chi.value;
      err += std::ldexp(binom * chi.error_estimate, -n);
      binom = binom * (n - j) / (j + 1);
    }
    value += std::ldexp(1.0, -n) * sum;
  }
  return {value, err, std::string("D3/") + std::string(to_string(d.kind)), integral.nodes};
}

}  // namespace cylrep
