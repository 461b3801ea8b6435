#pragma once

// Splitting of a complex order into nearest-integer and fractional parts.

#include <cmath>
#include <string_view>

#include "cylrep/config.hpp"

namespace cylrep {

enum class OrderKind { Integer, HalfInteger, NearInteger, NearHalfInteger, Generic };

inline std::string_view to_string(OrderKind k) {
  switch (k) {
    case OrderKind::Integer: return "integer";
    case OrderKind::HalfInteger: return "half-integer";
    case OrderKind::NearInteger: return "near-integer";
    case OrderKind::NearHalfInteger: return "near-half-integer";
    case OrderKind::Generic: return "generic";
  }
  return "generic";
}

/// mu = integral_part + fractional_part with -1/2 < Re(fractional_part) <= 1/2.
struct OrderDecomposition {
  cplx mu;
  long integral_part;
  cplx fractional_part;
  OrderKind kind;
};

/// Nearest integer to x with ties n + 1/2 going down to n.
inline long round_half_down(double x) { return static_cast<long>(std::ceil(x - 0.5)); }

inline OrderDecomposition decompose(cplx mu, double switch_epsilon = EvalConfig{}.switch_epsilon) {
  if (!is_finite(mu)) throw DomainError("order must be finite");
  const long n = round_half_down(mu.real());
  // |Re mu - n| <= 1/2, so the subtraction is exact.
  const cplx frac{mu.real() - static_cast<double>(n), mu.imag()};

  OrderKind kind = OrderKind::Generic;
  const double nearest_int = std::round(mu.real());
  const double nearest_half = std::floor(mu.real()) + 0.5;
  const double d_int = std::abs(mu - cplx{nearest_int, 0.0});
  const double d_half = std::abs(mu - cplx{nearest_half, 0.0});
  if (d_int == 0.0) {
    kind = OrderKind::Integer;
  } else if (frac == cplx{0.5, 0.0}) {
    kind = OrderKind::HalfInteger;
  } else if (d_int < switch_epsilon) {
    kind = OrderKind::NearInteger;
  } else if (d_half < switch_epsilon) {
    kind = OrderKind::NearHalfInteger;
  }
  return {mu, n, frac, kind};
}

inline OrderDecomposition decompose(cplx mu, const EvalConfig& cfg) {
  return decompose(mu, cfg.switch_epsilon);
}

enum class SignRegime { Negative, NonNegative };

/// Negative iff Re mu < 0; Re mu = 0 counts as NonNegative.
inline SignRegime sign_regime(cplx mu) {
  return mu.real() < 0.0 ? SignRegime::Negative : SignRegime::NonNegative;
}

/// sgn(Re mu) with sgn(0) = +1.
inline double order_sign(cplx mu) { return sign_regime(mu) == SignRegime::Negative ? -1.0 : 1.0; }

}  // namespace cylrep
