#pragma once

// Dawson's integral, spherical Bessel functions through their Dawson-integral
// representations, and the erf / Dawson series that follow from them.

#include <cmath>
#include <string>

#include "cylrep/cylinder.hpp"

namespace cylrep {

struct SeriesTruncation {
  int max_terms = 64;
  double tail_tol = 1e-12;

  void validate() const {
    if (max_terms < 1) throw DomainError("SeriesTruncation: max_terms must be >= 1");
    if (!(tail_tol > 0.0)) throw DomainError("SeriesTruncation: tail_tol must be positive");
  }
};

namespace detail {

// e^{-w^2} sum w^{2k+1} / (k! (2k+1)): all terms share a phase when w is
// near the real axis.
inline cplx dawson_exp_series(cplx w) {
  const cplx w2 = w * w;
  cplx term = w;  // w^{2k+1}/k!
  cplx sum = w;
  int small = 0;
  for (int k = 1; k < 1000; ++k) {
    term *= w2 / static_cast<double>(k);
    const cplx t = term / static_cast<double>(2 * k + 1);
    sum += t;
    if (std::abs(t) <= 1e-17 * std::abs(sum) && k > std::abs(w2)) {
      if (++small == 3) break;
    } else {
      small = 0;
    }
  }
  return std::exp(-w2) * sum;
}

// sum (-2)^k w^{2k+1} / (2k+1)!!: no cancellation near the imaginary axis.
inline cplx dawson_maclaurin(cplx w) {
  const cplx w2 = w * w;
  cplx term = w;
  cplx sum = w;
  int small = 0;
  for (int k = 1; k < 1000; ++k) {
    term *= -2.0 * w2 / static_cast<double>(2 * k + 1);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > std::abs(w2)) {
      if (++small == 3) break;
    } else {
      small = 0;
    }
  }
  return sum;
}

// Faddeeva function w(z) = e^{-z^2} erfc(-iz) for Im z >= 0 by its
// continued fraction, evaluated with modified Lentz.
inline cplx faddeeva_cf(cplx z) {
  const double tiny = 1e-300;
  cplx f = z;
  cplx c = f, d = 0.0;
  for (int k = 1; k < 5000; ++k) {
    const double a = -0.5 * k;
    d = z + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = z + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const cplx delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return kI / (kSqrtPi * f);
}

}  // namespace detail

/// Dawson's integral F(w) = e^{-w^2} int_0^w e^{t^2} dt.
inline cplx dawson(cplx w) {
  if (!is_finite(w)) throw DomainError("dawson: w must be finite");
  if (w == cplx{0.0, 0.0}) return {0.0, 0.0};
  const double ax = std::abs(w.real()), ay = std::abs(w.imag());
  if (std::abs(w) <= 6.0) {
    if (ay <= ax && ay <= 1.5) return detail::dawson_exp_series(w);
    if (ax < ay && ax <= 1.5) return detail::dawson_maclaurin(w);
  }
  // F(z) = (i sqrt(pi)/2)(e^{-z^2} - w(z)) in the upper half plane; F is odd.
  const bool flip = w.imag() < 0.0 || (w.imag() == 0.0 && w.real() < 0.0);
  const cplx z = flip ? -w : w;
  const cplx f = kI * (kSqrtPi / 2.0) * (std::exp(-z * z) - detail::faddeeva_cf(z));
  return flip ? -f : f;
}

/// j_n(x), n >= 0, from the Maclaurin series when n exceeds |x| and from
/// sin/cos with upward recurrence otherwise. Used where j_n must not depend
/// on the Dawson-integral representation.
inline cplx spherical_j_closed(long n, cplx x) {
  if (n < 0) throw DomainError("spherical_j_closed: requires n >= 0");
  if (!is_finite(x)) throw DomainError("spherical_j_closed: x must be finite");
  if (x == cplx{0.0, 0.0}) return n == 0 ? 1.0 : 0.0;
  if (std::abs(x) <= std::max(2.0, static_cast<double>(n))) {
    cplx lead{1.0, 0.0};
    for (long k = 1; k <= n; ++k) lead *= x / static_cast<double>(2 * k + 1);
    const cplx q = -0.5 * x * x;
    cplx term{1.0, 0.0};
    cplx sum{1.0, 0.0};
    int small = 0;
    for (long k = 1; k < 500; ++k) {
      term *= q / (static_cast<double>(k) * static_cast<double>(2 * n + 2 * k + 1));
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) {
        if (++small == 2) break;
      } else {
        small = 0;
      }
    }
    return lead * sum;
  }
  cplx j0 = std::sin(x) / x;
  if (n == 0) return j0;
  cplx j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  for (long k = 1; k < n; ++k) {
    const cplx next = static_cast<double>(2 * k + 1) / x * j1 - j0;
    j0 = j1;
    j1 = next;
  }
  return j1;
}

namespace detail {

/// (1/pi) int_0^pi F(-i sqrt(-2iz) cos(t/2)) cos((m+1/2) t) dt.
inline Part dawson_cosine_integral(long m, cplx z, const EvalConfig& cfg) {
  const cplx root = std::sqrt(2.0) * std::exp(cplx{0.0, -kPi / 4.0}) * std::sqrt(z);
  if (cfg.branch_check && std::abs(root * root - cplx{0.0, -2.0} * z) > 1e-12 * (1.0 + 2.0 * std::abs(z)))
    throw DomainError("branch consistency check failed for sqrt(-2iz)");
  const cplx arg = -kI * root;
  const double k = static_cast<double>(m) + 0.5;
  auto integrand = [&](double t) { return dawson(arg * std::cos(0.5 * t)) * std::cos(k * t); };
  const QuadratureResult q = integrate(integrand, 0.0, kPi, cfg.quad_tol);
  quad_or_throw(q, "Dawson cosine integral", cplx{1.0 / kPi, 0.0});
  return {q.value / kPi, q.error_estimate / kPi, q.nodes_used};
}

inline void check_spherical(long m, cplx z, const EvalConfig& cfg, const char* what) {
  check_argument(z, cfg, true, what);
  if (std::labs(m) > cfg.max_sum_order) throw DomainError(std::string(what) + ": |m| exceeds max_sum_order");
}

}  // namespace detail

/// Spherical Bessel function of the first kind j_m(z), m any integer.
inline EvalResult spherical_j(long m, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  detail::check_spherical(m, z, cfg, "j_m(z)");
  if (z == cplx{0.0, 0.0}) {
    if (m >= 0) return {{m == 0 ? 1.0 : 0.0, 0.0}, 0.0, "limit/z=0", 0};
    throw DivergenceError("j_m(z) divergent at z=0 for m <= -1");
  }
  const auto integral = detail::dawson_cosine_integral(m, z, cfg);
  cplx sum{};
  double magnitude = 0.0;
  for (long j = 1; j <= -m; ++j) {
    const double coeff = std::exp(std::lgamma(static_cast<double>(j - m - 1)) -
                                  std::lgamma(static_cast<double>(j)) -
                                  std::lgamma(static_cast<double>(-j - m + 1)));
    const cplx term = coeff * pow_rotated(z, cplx{0.5 - static_cast<double>(j), 0.0}, 2.0);
    sum += term;
    magnitude += std::abs(term);
  }
  const cplx pre = std::sqrt(2.0) * i_pow(cplx{static_cast<double>(m) + 1.5, 0.0}) * std::exp(kI * z) / std::sqrt(z);
  const cplx value = pre * (integral.value + kI * sign_pow(m) * sum);
  const double err = std::abs(pre) * (integral.error + 10.0 * kEps * magnitude);
  return {value, err, "J12.1/spherical", integral.nodes};
}

/// Spherical Bessel function of the second kind y_m(z), m any integer.
inline EvalResult spherical_y(long m, cplx z, const EvalConfig& cfg = {}) {
  cfg.validate();
  detail::check_spherical(m, z, cfg, "y_m(z)");
  if (z == cplx{0.0, 0.0}) throw DivergenceError("y_m(z) divergent at z=0");
  const auto integral = detail::dawson_cosine_integral(m, z, cfg);
  cplx sum{};
  double magnitude = 0.0;
  for (long j = 0; j <= m; ++j) {
    const double coeff = std::exp(std::lgamma(static_cast<double>(2 * m - j + 1)) -
                                  std::lgamma(static_cast<double>(j + 1)) -
                                  std::lgamma(static_cast<double>(m - j + 1)));
    const cplx term = coeff * pow_rotated(z, cplx{static_cast<double>(j - m) - 0.5, 0.0}, 2.0);
    sum += term;
    magnitude += std::abs(term);
  }
  const cplx pre = std::sqrt(2.0) * std::exp(cplx{0.0, kPi / 4.0}) / std::sqrt(z) * std::exp(kI * z) * i_pow(m);
  const cplx value = pre * (-integral.value + kI * sign_pow(m) * sum);
  const double err = std::abs(pre) * (integral.error + 10.0 * kEps * magnitude);
  return {value, err, "HY.3bis/spherical", integral.nodes};
}

/// erf(w cos(theta/2)) from its expansion in I_{m+1/2}(w^2/2). The series
/// depends on w^2 only, so the half plane Re w < 0 is reached by oddness.
inline cplx erf_series(cplx w, double theta, const SeriesTruncation& trunc = {}, const EvalConfig& cfg = {}) {
  trunc.validate();
  if (!is_finite(w) || !std::isfinite(theta)) throw DomainError("erf_series: arguments must be finite");
  if (w == cplx{0.0, 0.0}) return {0.0, 0.0};
  if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) return -erf_series(-w, theta, trunc, cfg);
  const cplx x = 0.5 * w * w;
  const cplx pre = 2.0 * std::exp(-x * std::cos(theta));
  // Above the sector of bessel_i, I_k(x) = e^{i pi k} I_k(-x).
  const bool rotate = std::arg(x) > kPi / 2.0;
  cplx sum{};
  int small = 0;
  for (int m = 0; m < trunc.max_terms; ++m) {
    const double k = m + 0.5;
    const cplx ik = rotate ? i_pow(cplx{2.0 * k, 0.0}) * bessel_i(cplx{k, 0.0}, -x, cfg).value
                           : bessel_i(cplx{k, 0.0}, x, cfg).value;
    const cplx amp = pre * ik;
    sum += amp * std::cos(k * theta);
    if (std::abs(amp) <= trunc.tail_tol * std::max(1.0, std::abs(sum))) {
      if (++small == 2) return sum;
    } else {
      small = 0;
    }
  }
  throw AccuracyError("erf_series: tail did not fall below tail_tol within max_terms", sum);
}

/// (1/pi) int_0^pi F(w cos(theta/2)) cos((m+1/2) theta) dtheta in closed form.
inline cplx dawson_cosine_coefficient(long m, cplx w) {
  if (m < 0) throw DomainError("dawson_cosine_coefficient: requires m >= 0");
  if (!is_finite(w)) throw DomainError("dawson_cosine_coefficient: w must be finite");
  if (w == cplx{0.0, 0.0}) return {0.0, 0.0};
  const cplx x = -0.5 * kI * w * w;
  return w * std::exp(-0.5 * w * w) / (2.0 * i_pow(m)) * spherical_j_closed(m, x);
}

/// F(w cos theta) from its cosine series in spherical Bessel functions.
inline cplx dawson_series(cplx w, double theta, const SeriesTruncation& trunc = {}) {
  trunc.validate();
  if (!is_finite(w) || !std::isfinite(theta)) throw DomainError("dawson_series: arguments must be finite");
  if (w == cplx{0.0, 0.0}) return {0.0, 0.0};
  const cplx x = -0.5 * kI * w * w;
  const cplx pre = w * std::exp(-0.5 * w * w);
  cplx sum{};
  int small = 0;
  for (int m = 0; m < trunc.max_terms; ++m) {
    const cplx amp = pre * i_pow(-m) * spherical_j_closed(m, x);
    sum += amp * std::cos((2.0 * m + 1.0) * theta);
    if (std::abs(amp) <= trunc.tail_tol * std::max(1.0, std::abs(sum))) {
      if (++small == 2) return sum;
    } else {
      small = 0;
    }
  }
  throw AccuracyError("dawson_series: tail did not fall below tail_tol within max_terms", sum);
}

/// Right-hand side of the duplication formula, equal to F(2w).
inline cplx dawson_duplication(cplx w, const SeriesTruncation& trunc = {}) {
  trunc.validate();
  if (!is_finite(w)) throw DomainError("dawson_duplication: w must be finite");
  if (w == cplx{0.0, 0.0}) return {0.0, 0.0};
  const cplx x = -2.0 * kI * w * w;
  const cplx pre = 6.0 * w * std::exp(-2.0 * w * w);
  cplx sum{};
  int small = 0;
  for (int m = 0; m < trunc.max_terms; ++m) {
    const cplx amp = pre * sign_pow(m) * (spherical_j_closed(6 * m + 4, x) - kI * spherical_j_closed(6 * m + 1, x));
    sum += amp;
    if (std::abs(amp) <= trunc.tail_tol * std::max(1.0, std::abs(sum))) {
      if (++small == 2) return 2.0 * dawson(w) + sum;
    } else {
      small = 0;
    }
  }
  throw AccuracyError("dawson_duplication: tail did not fall below tail_tol within max_terms",
                      2.0 * dawson(w) + sum);
}

}  // namespace cylrep
