#pragma once

// Scalar helpers shared by every module: branch conventions for complex
// log/power, an accurate sin(pi z), and a few constants.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "cylrep/errors.hpp"

namespace cylrep {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr cplx kI{0.0, 1.0};

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// True when z lies on the ray (-inf, 0], the cut of the principal log.
inline bool on_negative_real_axis(cplx z) { return z.imag() == 0.0 && z.real() <= 0.0; }

/// Principal logarithm with Im in (-pi, pi]. Unlike std::log this ignores
/// the sign of a zero imaginary part, so -x-0i maps to ln x + i*pi.
inline cplx principal_log(cplx z) {
  if (z.imag() == 0.0) {
    if (z.real() < 0.0) return {std::log(-z.real()), kPi};
    return {std::log(z.real()), 0.0};
  }
  return std::log(z);
}

/// Principal power z^a = exp(a Log z), with 0^a = 0 for Re a > 0 and 0^0 = 1.
inline cplx principal_pow(cplx z, cplx a) {
  if (a == cplx{0.0, 0.0}) return {1.0, 0.0};
  if (z == cplx{0.0, 0.0}) {
    if (a.real() > 0.0) return {0.0, 0.0};
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  return std::exp(a * principal_log(z));
}

/// Integer power by repeated squaring; exact for small n on Gaussian
/// integers, no branch involved.
inline cplx int_pow(cplx z, long n) {
  if (n < 0) return cplx{1.0, 0.0} / int_pow(z, -n);
  cplx result{1.0, 0.0};
  cplx base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

/// i^n for integer n, exactly.
inline cplx i_pow(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// (-1)^n for integer n.
inline double sign_pow(long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

/// Principal i^a = exp(i*pi*a/2).
inline cplx i_pow(cplx a) { return std::exp(kI * (kPi / 2.0) * a); }

/// Logarithm of -i*c*z continued from the principal Log z: Log z + ln c - i*pi/2.
/// Its cut is the cut of z itself (negative real z), which is what keeps the
/// integral representations analytic on the whole slit z-plane. c > 0.
inline cplx log_rotated(cplx z, double c = 1.0) {
  return principal_log(z) + cplx{std::log(c), -kPi / 2.0};
}

/// (-i c z)^a on the continued branch of log_rotated.
inline cplx pow_rotated(cplx z, cplx a, double c = 1.0) {
  if (a == cplx{0.0, 0.0}) return {1.0, 0.0};
  if (z == cplx{0.0, 0.0}) {
    if (a.real() > 0.0) return {0.0, 0.0};
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  return std::exp(a * log_rotated(z, c));
}

/// sin(pi z) with the real part reduced first, so the zeros at integers are
/// exact and values near them keep full relative accuracy.
inline cplx sin_pi(cplx z) {
  const double k = std::round(z.real());
  const double r = z.real() - k;  // |r| <= 1/2, exact
  const double sign = sign_pow(static_cast<long>(std::fmod(k, 2.0)));
  if (r == 0.0 && z.imag() == 0.0) return {0.0, 0.0};
  return sign * std::sin(kPi * cplx{r, z.imag()});
}

/// cos(pi z) with the same reduction as sin_pi.
inline cplx cos_pi(cplx z) {
  const double k = std::round(z.real());
  const double r = z.real() - k;
  const double sign = sign_pow(static_cast<long>(std::fmod(k, 2.0)));
  if (std::abs(r) == 0.5 && z.imag() == 0.0) return {0.0, 0.0};
  return sign * std::cos(kPi * cplx{r, z.imag()});
}

/// cos(mu (pi - t)) with mu pi reduced by exact quarter turns, so values near
/// the zeros of cos(mu pi) keep their relative accuracy at t = 0.
inline cplx cos_mu_pi_minus(cplx mu, double t) {
  const double k = std::round(2.0 * mu.real());
  const cplx r{mu.real() - 0.5 * k, mu.imag()};
  const cplx y = kPi * r - mu * t;
  switch (static_cast<int>(std::fmod(std::fmod(k, 4.0) + 4.0, 4.0))) {
    case 0: return std::cos(y);
    case 1: return -std::sin(y);
    case 2: return -std::cos(y);
    default: return std::sin(y);
  }
}

/// Relative distance helper used throughout the tests and reports.
inline double rel_err(cplx value, cplx reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

inline bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

inline bool is_integer(cplx z) { return z.imag() == 0.0 && z.real() == std::round(z.real()); }

}  // namespace cylrep
