#pragma once

// Complex gamma-family kernel: Gamma, 1/Gamma, the entire incomplete gamma
// gamma*(nu, w), the regularized lower incomplete gamma P(nu, w), the upper
// incomplete gamma at order zero, and gamma ratios across pole pairs.

#include <array>
#include <cmath>
#include <string>

#include "cylrep/complex_math.hpp"

namespace cylrep {

namespace detail {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey).
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr std::array<double, 15> kLanczosCoeff = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

inline constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

// log Gamma(z) for Re z >= 1/2. The imaginary part is not the continuous
// branch; only exp() of the result is meaningful.
inline cplx lanczos_log_gamma(cplx z) {
  const cplx zz = z - 1.0;
  cplx x = kLanczosCoeff[0];
  for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) x += kLanczosCoeff[i] / (zz + static_cast<double>(i));
  const cplx t = zz + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (zz + 0.5) * std::log(t) - t + std::log(x);
}

inline cplx lanczos_gamma(cplx z) {
  const cplx zz = z - 1.0;
  cplx x = kLanczosCoeff[0];
  for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) x += kLanczosCoeff[i] / (zz + static_cast<double>(i));
  const cplx t = zz + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((zz + 0.5) * std::log(t) - t) * x;
}

}  // namespace detail

/// Gamma(z). Throws PoleError at nonpositive integers.
inline cplx gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("Gamma has a pole at a nonpositive integer");
  if (z.real() < 0.5) return kPi / (sin_pi(z) * detail::lanczos_gamma(1.0 - z));
  return detail::lanczos_gamma(z);
}

/// log Gamma(z) up to a multiple of 2*pi*i.
inline cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("Gamma has a pole at a nonpositive integer");
  if (z.real() < 0.5) return std::log(kPi) - std::log(sin_pi(z)) - detail::lanczos_log_gamma(1.0 - z);
  return detail::lanczos_log_gamma(z);
}

/// 1/Gamma(z), entire; exactly zero at nonpositive integers.
inline cplx reciprocal_gamma(cplx z) {
  if (is_nonpositive_integer(z)) return {0.0, 0.0};
  if (z.real() < 0.5) return sin_pi(z) * detail::lanczos_gamma(1.0 - z) / kPi;
  return 1.0 / detail::lanczos_gamma(z);
}

/// Stop rule and term budget for the incomplete-gamma series.
struct SeriesControl {
  int max_terms = 500;
  double stagnation = 1e-17;
};

namespace detail {

// Lentz evaluation of the continued fraction h with
// Gamma(a, w) = e^{-w} w^a h, valid off the negative real axis.
// Returns false if it did not settle within max_iter.
inline bool upper_gamma_cf(cplx a, cplx w, cplx& h, int max_iter = 2000) {
  constexpr double tiny = 1e-300;
  cplx b = w + 1.0 - a;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  h = d;
  for (int i = 1; i <= max_iter; ++i) {
    const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const cplx del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 4.0 * kEps) return true;
  }
  return false;
}

// gamma*(nu, w) = e^{-w} sum_m w^m / Gamma(nu+m+1). Good when Re w >= 0.
inline cplx gamma_star_exp_series(cplx nu, cplx w, const SeriesControl& ctl) {
  cplx term = reciprocal_gamma(nu + 1.0);
  cplx sum = term;
  int small = 0;
  for (int m = 1; m <= ctl.max_terms; ++m) {
    term *= w / (nu + static_cast<double>(m));
    sum += term;
    if (std::abs(term) <= ctl.stagnation * std::abs(sum) && m > std::abs(w)) {
      if (++small == 3) return std::exp(-w) * sum;
    } else {
      small = 0;
    }
  }
  throw AccuracyError("gamma* series did not converge", std::exp(-w) * sum);
}

// gamma*(nu, w) = (1/Gamma(nu)) sum_m (-w)^m / ((nu+m) m!). Good when Re w < 0.
// Requires nu not a nonpositive integer (handled by the caller).
inline cplx gamma_star_power_series(cplx nu, cplx w, const SeriesControl& ctl) {
  // 1/(Gamma(nu) (nu+m)) written as 1/Gamma(nu+1) * nu/(nu+m) so that nu -> 0
  // stays regular.
  const cplx rg1 = reciprocal_gamma(nu + 1.0);
  cplx power{1.0, 0.0};
  cplx sum = rg1;  // m = 0 term: nu/(nu+0) = 1
  int small = 0;
  for (int m = 1; m <= ctl.max_terms; ++m) {
    power *= -w / static_cast<double>(m);
    const cplx term = power * rg1 * nu / (nu + static_cast<double>(m));
    sum += term;
    if (std::abs(term) <= ctl.stagnation * std::abs(sum) && m > std::abs(w)) {
      if (++small == 3) return sum;
    } else {
      small = 0;
    }
  }
  throw AccuracyError("gamma* series did not converge", sum);
}

}  // namespace detail

/// gamma*(nu, w), entire in both arguments, with P(nu, w) = w^nu gamma*(nu, w).
inline cplx gamma_star(cplx nu, cplx w, const SeriesControl& ctl = {}) {
  if (nu == cplx{0.0, 0.0}) return {1.0, 0.0};
  if (is_nonpositive_integer(nu)) return int_pow(w, static_cast<long>(-nu.real()));
  const double aw = std::abs(w);
  // The series lose roughly exp(|w| - |Re w|) to cancellation; past that,
  // go through the upper incomplete gamma continued fraction.
  if (aw > 2.0 && aw - std::abs(w.real()) > 9.0) {
    cplx h;
    if (detail::upper_gamma_cf(nu, w, h)) {
      return std::exp(-nu * principal_log(w)) - reciprocal_gamma(nu) * std::exp(-w) * h;
    }
  }
  if (w.real() >= 0.0 || is_nonpositive_integer(nu + 1.0)) return detail::gamma_star_exp_series(nu, w, ctl);
  return detail::gamma_star_power_series(nu, w, ctl);
}

/// P(nu, w) given log w on whatever branch the caller has chosen.
inline cplx regularized_p_log(cplx nu, cplx w, cplx log_w, const SeriesControl& ctl = {}) {
  if (nu == cplx{0.0, 0.0}) return {1.0, 0.0};
  if (is_integer(nu)) return int_pow(w, static_cast<long>(nu.real())) * gamma_star(nu, w, ctl);
  return std::exp(nu * log_w) * gamma_star(nu, w, ctl);
}

/// Regularized lower incomplete gamma P(nu, w) = gamma(nu, w)/Gamma(nu) with
/// the principal branch of w^nu. P(0, w) = 1 exactly.
inline cplx regularized_p(cplx nu, cplx w, const SeriesControl& ctl = {}) {
  if (!is_finite(nu) || !is_finite(w)) throw DomainError("P(nu, w): arguments must be finite");
  if (nu == cplx{0.0, 0.0}) return {1.0, 0.0};
  if (is_integer(nu)) return regularized_p_log(nu, w, {}, ctl);
  if (w == cplx{0.0, 0.0}) {
    if (nu.real() > 0.0) return {0.0, 0.0};
    throw DivergenceError("P(nu, w) diverges at w = 0 for Re nu <= 0");
  }
  if (on_negative_real_axis(w))
    throw DomainError("P(nu, w): w on the branch cut (-inf, 0] with non-integer nu");
  return regularized_p_log(nu, w, principal_log(w), ctl);
}

/// P(xi, w) - w^xi e^{-w} sum_{k<n} w^k / Gamma(xi+k+1), which equals P(xi+n, w).
inline cplx p_recurrence_check(cplx xi, int n, cplx w, const SeriesControl& ctl = {}) {
  if (n < 0) throw DomainError("recurrence step must be nonnegative");
  const cplx p = regularized_p(xi, w, ctl);
  if (n == 0) return p;
  cplx sum{0.0, 0.0};
  cplx power{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    sum += power * reciprocal_gamma(xi + static_cast<double>(k) + 1.0);
    power *= w;
  }
  const cplx w_xi = is_integer(xi) ? int_pow(w, static_cast<long>(xi.real())) : principal_pow(w, xi);
  return p - w_xi * std::exp(-w) * sum;
}

/// Gamma(0, w) = E1(w) given log w on the caller's branch.
inline cplx upper_gamma_zero_log(cplx w, cplx log_w, const SeriesControl& ctl = {}) {
  if (w == cplx{0.0, 0.0}) throw DivergenceError("Gamma(0, w) diverges logarithmically at w = 0");
  const double aw = std::abs(w);
  if (aw > 2.0 && aw + w.real() > 8.0) {
    cplx h;
    if (detail::upper_gamma_cf(cplx{0.0, 0.0}, w, h)) {
      // The fraction is single-valued on the principal sheet; move onto the
      // caller's sheet through the log term.
      return std::exp(-w) * h + (principal_log(w) - log_w);
    }
  }
  cplx term{1.0, 0.0};
  cplx sum{0.0, 0.0};
  int small = 0;
  for (int k = 1; k <= ctl.max_terms; ++k) {
    term *= -w / static_cast<double>(k);
    const cplx add = term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) <= ctl.stagnation * std::abs(sum) && k > aw) {
      if (++small == 3) return -kEulerGamma - log_w - sum;
    } else {
      small = 0;
    }
  }
  throw AccuracyError("Gamma(0, w) series did not converge", -kEulerGamma - log_w - sum);
}

/// Gamma(0, w) with the principal branch of ln w.
inline cplx upper_gamma_zero(cplx w, const SeriesControl& ctl = {}) {
  if (w == cplx{0.0, 0.0}) throw DivergenceError("Gamma(0, w) diverges logarithmically at w = 0");
  return upper_gamma_zero_log(w, principal_log(w), ctl);
}

/// Gamma(numerator_arg) / Gamma(denominator_arg). When both arguments sit on
/// poles, the value is the limit taken along
/// denominator - pole = pole_rate * (numerator - pole); pole_rate = 2 is the
/// Gamma(j + mu - 1/2) / Gamma(j + 2 mu) configuration at half-integer mu.
struct GammaRatioRequest {
  cplx numerator_arg;
  cplx denominator_arg;
  double pole_rate = 2.0;
};

inline cplx gamma_ratio(const GammaRatioRequest& req) {
  const bool num_pole = is_nonpositive_integer(req.numerator_arg);
  const bool den_pole = is_nonpositive_integer(req.denominator_arg);
  if (num_pole && den_pole) {
    const long k1 = static_cast<long>(-req.numerator_arg.real());
    const long k2 = static_cast<long>(-req.denominator_arg.real());
    // Gamma(-k + e) ~ (-1)^k / (k! e)
    const double ratio = std::exp(std::lgamma(static_cast<double>(k2) + 1.0) -
                                  std::lgamma(static_cast<double>(k1) + 1.0));
    return req.pole_rate * sign_pow(k1 + k2) * ratio;
  }
  if (num_pole) throw PoleError("gamma ratio: numerator pole without matching denominator pole (TruePole)");
  if (den_pole) return {0.0, 0.0};
  const double big = std::max(std::abs(req.numerator_arg), std::abs(req.denominator_arg));
  if (big > 100.0) return std::exp(log_gamma(req.numerator_arg) - log_gamma(req.denominator_arg));
  return gamma(req.numerator_arg) * reciprocal_gamma(req.denominator_arg);
}

}  // namespace cylrep
