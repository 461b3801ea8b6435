#pragma once

// Reference evaluators used only for validation. They share nothing with the
// production representations except the scalar gamma functions, and carry
// their own Gauss-Legendre quadrature.

#include <array>
#include <cmath>
#include <vector>

#include "cylrep/complex_math.hpp"
#include "cylrep/errors.hpp"
#include "cylrep/gamma.hpp"

namespace cylrep::oracle {

struct OracleResult {
  cplx value{};
  long terms_or_nodes = 0;
  double tail_bound = 0.0;
  bool flagged = false;
};

struct OracleSeriesControl {
  int max_terms = 400;
};

/// Composite Gauss-Legendre rule, 20 points per panel.
class GaussLegendre {
 public:
  static const GaussLegendre& instance() {
    static const GaussLegendre rule;
    return rule;
  }

  template <class F>
  cplx panels(F&& f, double a, double b, int count) const {
    const double h = (b - a) / count;
    cplx total{};
    for (int p = 0; p < count; ++p) {
      const double mid = a + (p + 0.5) * h;
      cplx s{};
      for (std::size_t i = 0; i < kOrder; ++i) s += weight_[i] * f(mid + 0.5 * h * node_[i]);
      total += 0.5 * h * s;
    }
    return total;
  }

  /// Doubles the panel count until two successive sums agree to tol.
  template <class F>
  OracleResult integrate(F&& f, double a, double b, double tol = 1e-14, int max_panels = 1 << 14) const {
    int count = 4;
    cplx prev = panels(f, a, b, count);
    while (count < max_panels) {
      count *= 2;
      const cplx next = panels(f, a, b, count);
      const double diff = std::abs(next - prev);
      prev = next;
      if (diff <= tol * std::max(1.0, std::abs(next))) return {next, static_cast<long>(count * kOrder), diff, false};
    }
    return {prev, static_cast<long>(count * kOrder), 0.0, true};
  }

  static constexpr std::size_t kOrder = 20;

 private:
  GaussLegendre() {
    const int n = static_cast<int>(kOrder);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      node_[i] = x;
      weight_[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
  std::array<double, kOrder> node_{};
  std::array<double, kOrder> weight_{};
};

namespace detail {

// sum_k sign^k (z/2)^{mu+2k} / (k! Gamma(mu+k+1))
inline OracleResult bessel_series(cplx mu, cplx z, double sign, const OracleSeriesControl& ctl) {
  if (!is_finite(mu) || !is_finite(z)) throw DomainError("series oracle: arguments must be finite");
  if (z == cplx{0.0, 0.0}) {
    if (mu == cplx{0.0, 0.0}) return {{1.0, 0.0}, 1, 0.0, false};
    if (mu.real() > 0.0 || is_nonpositive_integer(mu) || is_integer(mu)) return {{0.0, 0.0}, 1, 0.0, false};
    throw DivergenceError("series oracle: divergent at z=0");
  }
  if (!is_integer(mu) && on_negative_real_axis(z))
    throw DomainError("series oracle: z on the branch cut with non-integer order");

  const cplx half = 0.5 * z;
  const cplx q = sign * half * half;
  // Integer negative orders: the first -mu terms vanish identically.
  cplx pre = is_integer(mu) ? int_pow(half, static_cast<long>(mu.real())) : principal_pow(half, mu);
  cplx sum{};
  cplx qk{1.0, 0.0};
  double kfact = 1.0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    if (k > 0) {
      qk *= q;
      kfact *= k;
    }
    const cplx term = qk / kfact * reciprocal_gamma(mu + static_cast<double>(k) + 1.0);
    sum += term;
    // Once the term ratio is below one and falling, the remainder is
    // dominated by a geometric series.
    const double ratio = std::abs(q) / ((k + 1.0) * std::max(1e-300, std::abs(mu + static_cast<double>(k) + 2.0)));
    if (k > 2 && k + 1.0 > -mu.real() && ratio < 0.5) {
      const double tail = std::abs(term) * ratio / (1.0 - ratio);
      if (tail <= 1e-17 * std::abs(sum)) {
        return {pre * sum, k + 1, std::abs(pre) * tail, false};
      }
    }
  }
  return {pre * sum, ctl.max_terms, std::abs(pre * sum), true};
}

}  // namespace detail

/// J_mu(z) from its ascending power series.
inline OracleResult series_j(cplx mu, cplx z, const OracleSeriesControl& ctl = {}) {
  return detail::bessel_series(mu, z, -1.0, ctl);
}

/// I_mu(z) from its ascending power series.
inline OracleResult series_i(cplx mu, cplx z, const OracleSeriesControl& ctl = {}) {
  return detail::bessel_series(mu, z, 1.0, ctl);
}

/// J_mu(z) from Schlafli's integral, Re z > 0.
inline OracleResult schlafli_j(cplx mu, cplx z, double tol = 1e-14) {
  if (!is_finite(mu) || !is_finite(z)) throw DomainError("schlafli_j: arguments must be finite");
  if (!(z.real() > 0.0 || (z.real() == 0.0 && mu.real() > 0.0 && z.imag() != 0.0)))
    throw DomainError("schlafli_j: requires Re z > 0");
  const auto& gl = GaussLegendre::instance();
  auto first = [&](double t) { return std::cos(z * std::sin(t) - mu * t); };
  OracleResult a = gl.integrate(first, 0.0, kPi, tol);
  a.value /= kPi;
  a.tail_bound /= kPi;

  const cplx s = sin_pi(mu);
  if (s == cplx{0.0, 0.0}) return a;
  const double rz = std::max(z.real(), 1e-300);
  const double rmu = std::abs(mu.real());
  double T = std::asinh(std::max(5.0, 40.0 / rz));
  for (int it = 0; it < 2; ++it) T = std::asinh(std::max(5.0, (40.0 + rmu * T) / rz));
  auto second = [&](double t) { return std::exp(-(z * std::sinh(t) + mu * t)); };
  OracleResult b = gl.integrate(second, 0.0, T, tol);
  const double remainder = std::exp(-rz * std::sinh(T) + rmu * T) / (rz * std::cosh(T));
  const cplx factor = s / kPi;
  return {a.value - factor * b.value, a.terms_or_nodes + b.terms_or_nodes,
          a.tail_bound + std::abs(factor) * (b.tail_bound + remainder), a.flagged || b.flagged};
}

/// Y_mu(z): the combination formula for non-integer orders, a Richardson
/// extrapolated limit mu -> m for integer orders.
inline OracleResult oracle_y(cplx mu, cplx z, const OracleSeriesControl& ctl = {}) {
  auto combination = [&](cplx nu) {
    const OracleResult jp = series_j(nu, z, ctl);
    const OracleResult jm = series_j(-nu, z, ctl);
    const cplx s = sin_pi(nu);
    return OracleResult{(jp.value * cos_pi(nu) - jm.value) / s, jp.terms_or_nodes + jm.terms_or_nodes,
                        (jp.tail_bound + jm.tail_bound) / std::abs(s), jp.flagged || jm.flagged};
  };
  if (!is_integer(mu)) return combination(mu);
  if (z == cplx{0.0, 0.0}) throw DivergenceError("oracle_y: divergent at z=0");
  const std::array<double, 3> eps = {1e-4, 5e-5, 2.5e-5};
  std::array<cplx, 3> y{};
  long terms = 0;
  bool flagged = false;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    const OracleResult r = combination(mu + eps[k]);
    y[k] = r.value;
    terms += r.terms_or_nodes;
    flagged = flagged || r.flagged;
  }
  const cplx r1a = 2.0 * y[1] - y[0];
  const cplx r1b = 2.0 * y[2] - y[1];
  const cplx r2 = (4.0 * r1b - r1a) / 3.0;
  const double spread = std::abs(r2 - r1b);
  if (spread > 1e-7 * std::max(1.0, std::abs(r2))) flagged = true;
  return {r2, terms, spread, flagged};
}

/// H1 (kind 1) or H2 (kind 2) of order mu.
inline OracleResult oracle_h(int kind, cplx mu, cplx z, const OracleSeriesControl& ctl = {}) {
  if (kind != 1 && kind != 2) throw DomainError("oracle_h: kind must be 1 or 2");
  const double sgn = kind == 1 ? 1.0 : -1.0;
  if (is_integer(mu)) {
    const OracleResult j = series_j(mu, z, ctl);
    const OracleResult y = oracle_y(mu, z, ctl);
    return {j.value + sgn * kI * y.value, j.terms_or_nodes + y.terms_or_nodes, j.tail_bound + y.tail_bound,
            j.flagged || y.flagged};
  }
  const OracleResult jp = series_j(mu, z, ctl);
  const OracleResult jm = series_j(-mu, z, ctl);
  const cplx s = sin_pi(mu);
  const cplx rot = std::exp(-sgn * kI * kPi * mu);
  return {sgn * kI * (rot * jp.value - jm.value) / s, jp.terms_or_nodes + jm.terms_or_nodes,
          (std::abs(rot) * jp.tail_bound + jm.tail_bound) / std::abs(s), jp.flagged || jm.flagged};
}

/// K_mu(z) = (pi/2)(I_{-mu} - I_mu)/sin(mu pi), with the same Richardson limit
/// as oracle_y at integer order.
inline OracleResult oracle_k(cplx mu, cplx z, const OracleSeriesControl& ctl = {}) {
  auto combination = [&](cplx nu) {
    const OracleResult ip = series_i(nu, z, ctl);
    const OracleResult im = series_i(-nu, z, ctl);
    const cplx s = sin_pi(nu);
    return OracleResult{kPi / 2.0 * (im.value - ip.value) / s, ip.terms_or_nodes + im.terms_or_nodes,
                        kPi / 2.0 * (ip.tail_bound + im.tail_bound) / std::abs(s), ip.flagged || im.flagged};
  };
  if (!is_integer(mu)) return combination(mu);
  if (z == cplx{0.0, 0.0}) throw DivergenceError("oracle_k: divergent at z=0");
  const std::array<double, 3> eps = {1e-4, 5e-5, 2.5e-5};
  std::array<cplx, 3> v{};
  for (std::size_t k = 0; k < eps.size(); ++k) v[k] = combination(mu + eps[k]).value;
  const cplx r1a = 2.0 * v[1] - v[0];
  const cplx r1b = 2.0 * v[2] - v[1];
  const cplx r2 = (4.0 * r1b - r1a) / 3.0;
  const double spread = std::abs(r2 - r1b);
  return {r2, 0, spread, spread > 1e-7 * std::max(1.0, std::abs(r2))};
}

/// n-th derivative of J_mu from 2^{-n} sum_j (-1)^j C(n,j) J_{mu-n+2j}.
inline OracleResult series_j_derivative(cplx mu, cplx z, int n, const OracleSeriesControl& ctl = {}) {
  if (n < 0) throw DomainError("series_j_derivative: n must be nonnegative");
  cplx sum{};
  double tail = 0.0;
  double binom = 1.0;
  long terms = 0;
  bool flagged = false;
  for (int j = 0; j <= n; ++j) {
    const OracleResult r = series_j(mu - static_cast<double>(n) + 2.0 * j, z, ctl);
    sum += sign_pow(j) * binom * r.value;
    tail += binom * r.tail_bound;
    terms += r.terms_or_nodes;
    flagged = flagged || r.flagged;
    binom = binom * (n - j) / (j + 1);
  }
  return {std::ldexp(1.0, -n) * sum, terms, std::ldexp(tail, -n), flagged};
}

/// erf(w) from its Maclaurin series.
inline OracleResult erf_maclaurin(cplx w, int max_terms = 400) {
  if (!is_finite(w)) throw DomainError("erf_maclaurin: w must be finite");
  const cplx w2 = w * w;
  cplx power = w;  // (-1)^k w^{2k+1}/k!
  cplx sum = w;
  for (int k = 1; k < max_terms; ++k) {
    power *= -w2 / static_cast<double>(k);
    const cplx term = power / static_cast<double>(2 * k + 1);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > std::abs(w2)) return {2.0 / kSqrtPi * sum, k + 1, 0.0, false};
  }
  return {2.0 / kSqrtPi * sum, max_terms, 0.0, true};
}

/// F(w) = w int_0^1 e^{w^2 (s^2 - 1)} ds.
inline OracleResult dawson_quadrature(cplx w, double tol = 1e-14) {
  if (!is_finite(w)) throw DomainError("dawson_quadrature: w must be finite");
  const cplx w2 = w * w;
  OracleResult r = GaussLegendre::instance().integrate([&](double s) { return std::exp(w2 * (s * s - 1.0)); }, 0.0,
                                                        1.0, tol);
  r.value *= w;
  r.tail_bound *= std::abs(w);
  return r;
}

/// Bessel's integral (i^m/pi) int_0^pi e^{-iz cos t} cos(m t) dt, m integer.
inline OracleResult classical_integral_j(long m, cplx z, double tol = 1e-14) {
  if (!is_finite(z)) throw DomainError("classical_integral_j: z must be finite");
  const double md = static_cast<double>(m);
  OracleResult r = GaussLegendre::instance().integrate(
      [&](double t) { return std::exp(-kI * z * std::cos(t)) * std::cos(md * t); }, 0.0, kPi, tol);
  const cplx pre = i_pow(m) / kPi;
  r.value *= pre;
  r.tail_bound *= std::abs(pre);
  return r;
}

}  // namespace cylrep::oracle
