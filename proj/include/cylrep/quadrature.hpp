#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands on
// a finite interval, and the closed-form definite integrals used to check it.

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "cylrep/config.hpp"
#include "cylrep/gamma.hpp"

namespace cylrep {

struct QuadratureResult {
  cplx value{};
  double error_estimate = 0.0;
  std::size_t nodes_used = 0;
  bool converged = false;
  // Error is at the roundoff floor of the panels, above the requested
  // tolerance; the value is as good as double arithmetic allows.
  bool roundoff_limited = false;
};

/// Thrown when the integrand returns a non-finite sample.
class QuadratureSampleError : public DomainError {
 public:
  explicit QuadratureSampleError(double abscissa)
      : DomainError(message(abscissa)), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  static std::string message(double x) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite integrand sample at abscissa " << x;
    return os.str();
  }
  double abscissa_;
};

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cplx value;
  double error;
  double floor;  // roundoff limit 50 eps int|f|
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
cplx checked_sample(F& f, double x) {
  const cplx v = f(x);
  if (!is_finite(v)) throw QuadratureSampleError(x);
  return v;
}

template <class F>
Panel gk15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const cplx fc = checked_sample(f, centre);
  cplx kronrod = fc * kWgk[7];
  cplx gauss = fc * kWg[3];
  double resabs = std::abs(fc) * kWgk[7];
  std::array<cplx, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = checked_sample(f, centre - dx);
    f2[j] = checked_sample(f, centre + dx);
    kronrod += kWgk[j] * (f1[j] + f2[j]);
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1[j] + f2[j]);
  }
  const cplx mean = 0.5 * kronrod;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  const double scale = std::abs(half);
  resasc *= scale;
  resabs *= scale;
  double err = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * kEps * resabs;
  err = std::max(err, floor);
  return {a, b, kronrod * half, err, floor};
}

}  // namespace detail

/// Adaptive integration of f over [a, b]. The interval is split into
/// `initial_panels` equal pieces, then the panel with the largest error is
/// bisected until the total error meets the tolerance or the node budget
/// is spent (converged = false, best estimate returned). Refinement also
/// stops once the error is down to the roundoff floor of the panels, and the
/// result is then flagged roundoff_limited.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const Tolerances& tol = {}, int initial_panels = 4) {
  std::priority_queue<detail::Panel> heap;
  cplx total{};
  double total_err = 0.0;
  double total_floor = 0.0;
  std::size_t nodes = 0;
  initial_panels = std::max(1, initial_panels);
  for (int i = 0; i < initial_panels; ++i) {
    const double lo = a + (b - a) * i / initial_panels;
    const double hi = (i + 1 == initial_panels) ? b : a + (b - a) * (i + 1) / initial_panels;
    auto p = detail::gk15(f, lo, hi);
    nodes += 15;
    total += p.value;
    total_err += p.error;
    total_floor += p.floor;
    heap.push(p);
  }
  auto target = [&] { return std::max(tol.abs_tol, tol.rel_tol * std::abs(total)); };
  while (total_err > target() && total_err > 2.0 * total_floor) {
    if (nodes + 30 > tol.max_nodes) return {total, total_err, nodes, false};
    const detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // cannot bisect further
      return {total, total_err, nodes, false};
    }
    auto left = detail::gk15(f, worst.a, mid);
    auto right = detail::gk15(f, mid, worst.b);
    nodes += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_floor += left.floor + right.floor - worst.floor;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the incremental updates.
  cplx resum{};
  double err = 0.0;
  while (!heap.empty()) {
    resum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  const bool met = err <= std::max(tol.abs_tol, tol.rel_tol * std::abs(resum));
  return {resum, err, nodes, met, !met};
}

/// Substitution power for an endpoint factor t^alpha (Re alpha > -1): after
/// t = L s^p the factor becomes s^{p(alpha+1)-1}, which is kept >= 1.
inline int grading_power(double alpha_re) {
  if (alpha_re >= 1.0) return 1;
  const double p = std::ceil(2.0 / (1.0 + alpha_re));
  return static_cast<int>(std::clamp(p, 2.0, 64.0));
}

/// Integrates f(t) over [0, length] where f may behave like t^alpha near
/// t = 0. f is always called with the exact distance t from the singular
/// endpoint.
template <class F>
QuadratureResult integrate_graded(F&& f, double length, double alpha_re, const Tolerances& tol = {}) {
  const int p = grading_power(alpha_re);
  if (p == 1) return integrate(f, 0.0, length, tol);
  auto g = [&](double s) -> cplx {
    if (s == 0.0) return {0.0, 0.0};
    const double sp1 = std::pow(s, p - 1);
    const double t = length * sp1 * s;
    if (t == 0.0) return {0.0, 0.0};
    return f(t) * (length * p * sp1);
  };
  return integrate(g, 0.0, 1.0, tol);
}

/// (1 - cos t) / t^2 = sinc^2(t/2) / 2, smooth and positive on [0, pi].
inline double one_minus_cos_over_square(double t) {
  if (t == 0.0) return 0.5;
  const double h = 0.5 * t;
  const double r = std::sin(h) / h;
  return 0.5 * r * r;
}

/// log(1 - cos t) for t in (0, pi], without the underflow of 1 - cos t.
inline double log_one_minus_cos(double t) { return std::numbers::ln2 + 2.0 * std::log(std::sin(0.5 * t)); }

/// int_0^length t^alpha g(t) dt for Re alpha > -1 and g smooth on [0, length].
/// t^alpha is applied analytically after t = length s^p, so g never forms it
/// and may be called at t = 0 or at underflowed t. For Re alpha < -0.8 the
/// term g(0) length^{alpha+1}/(alpha+1) is split off exactly, because the
/// mass of t^alpha then spreads over hundreds of decades near t = 0.
template <class F>
QuadratureResult integrate_power(F&& g, double length, cplx alpha, const Tolerances& tol = {}) {
  if (!(alpha.real() > -1.0)) throw DomainError("integrate_power: requires Re alpha > -1");
  if (!(length > 0.0)) throw DomainError("integrate_power: requires a positive length");
  const cplx a1 = alpha + 1.0;
  const cplx length_pow = std::exp(a1 * std::log(length));
  const bool split = alpha.real() < -0.8;
  const int p = split ? 2 : grading_power(alpha.real());
  const cplx g0 = split ? g(0.0) : cplx{0.0, 0.0};
  if (!is_finite(g0)) throw QuadratureSampleError(0.0);
  const cplx main = split ? g0 * length_pow / a1 : cplx{0.0, 0.0};
  const cplx scale = static_cast<double>(p) * length_pow;
  const cplx expo = static_cast<double>(p) * a1 - 1.0;
  auto integrand = [&](double s) -> cplx {
    if (s == 0.0) return {0.0, 0.0};
    const double t = length * std::pow(s, p);
    return scale * std::exp(expo * std::log(s)) * (g(t) - g0);
  };
  Tolerances inner = tol;
  inner.abs_tol = std::max(tol.abs_tol, 0.5 * tol.rel_tol * std::abs(main));
  QuadratureResult r = integrate(integrand, 0.0, 1.0, inner);
  if (!split) return r;
  const bool usable = r.converged || r.roundoff_limited;
  r.value += main;
  r.error_estimate += 4.0 * kEps * std::abs(main);
  const bool met = r.error_estimate <= std::max(tol.abs_tol, tol.rel_tol * std::abs(r.value));
  r.converged = usable && met;
  r.roundoff_limited = usable && !met;
  return r;
}

/// int_0^pi (1+cos t)^a cos(b t) dt = (pi/2^a) Gamma(1+2a) / (Gamma(1+a-b) Gamma(1+a+b)),
/// Re a > -1/2.
inline cplx closed_form_cosine_integral(cplx a, cplx b) {
  if (!(a.real() > -0.5)) throw DomainError("cosine integral needs Re a > -1/2");
  return kPi * std::exp(-a * std::log(2.0)) * gamma(1.0 + 2.0 * a) * reciprocal_gamma(1.0 + a - b) *
         reciprocal_gamma(1.0 + a + b);
}

/// int_0^pi cos(mu t) / (1+cos t)^frac dt, Re frac < 1/2.
inline cplx closed_form_negative_power_integral(cplx mu, cplx frac) {
  if (!(frac.real() < 0.5)) throw DomainError("negative power integral needs Re frac < 1/2");
  return std::exp(frac * std::log(2.0)) * kPi * gamma(1.0 - 2.0 * frac) * reciprocal_gamma(1.0 - mu - frac) *
         reciprocal_gamma(1.0 + mu - frac);
}

/// int_0^pi ln(-i z (1+cos t)) dt = pi ln(-i z / 2), with ln(-i z) continued
/// from the principal Log z (cut on negative real z).
inline cplx log_kernel_integral(cplx z) {
  if (on_negative_real_axis(z)) throw DomainError("log kernel integral: z on the branch cut (-inf, 0]");
  return kPi * log_rotated(z, 0.5);
}

/// int_0^pi (1+cos t)^k dt = 2^k sqrt(pi) Gamma(k+1/2) / Gamma(k+1).
inline double power_kernel_integral(int k) {
  if (k < 0) throw DomainError("power kernel integral needs k >= 0");
  return std::ldexp(1.0, k) * kSqrtPi * std::exp(std::lgamma(k + 0.5) - std::lgamma(k + 1.0));
}

}  // namespace cylrep
