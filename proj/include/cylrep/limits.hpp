#pragma once

// Small-z and large-z limiting forms, and the ratio tests that compare them
// with full evaluations.

#include <string>
#include <string_view>
#include <vector>

#include "cylrep/cylinder.hpp"

namespace cylrep {

enum class LimitFormula { ChiSmallZ, ChiLargeZ, JSmallZ, YSmallZGeneric, YSmallZInteger, Y0SmallZ };

inline std::string_view to_string(LimitFormula f) {
  switch (f) {
    case LimitFormula::ChiSmallZ: return "ChiSmallZ";
    case LimitFormula::ChiLargeZ: return "ChiLargeZ";
    case LimitFormula::JSmallZ: return "JSmallZ";
    case LimitFormula::YSmallZGeneric: return "YSmallZGeneric";
    case LimitFormula::YSmallZInteger: return "YSmallZInteger";
    case LimitFormula::Y0SmallZ: return "Y0SmallZ";
  }
  return "?";
}

inline LimitFormula parse_limit_formula(std::string_view name) {
  for (auto f : {LimitFormula::ChiSmallZ, LimitFormula::ChiLargeZ, LimitFormula::JSmallZ,
                 LimitFormula::YSmallZGeneric, LimitFormula::YSmallZInteger, LimitFormula::Y0SmallZ})
    if (to_string(f) == name) return f;
  throw DomainError("unknown limiting form '" + std::string(name) + "'");
}

/// Order regime each formula is stated for.
inline std::string_view validity(LimitFormula f) {
  switch (f) {
    case LimitFormula::ChiSmallZ:
    case LimitFormula::ChiLargeZ: return "Re mu <= -1/2, mu not an integer";
    case LimitFormula::JSmallZ: return "mu not a negative integer";
    case LimitFormula::YSmallZGeneric: return "mu not an integer, Re mu != 0";
    case LimitFormula::YSmallZInteger: return "integer m != 0";
    case LimitFormula::Y0SmallZ: return "m = 0";
  }
  return "";
}

namespace detail {

inline void require_regime(bool ok, LimitFormula f) {
  if (!ok)
    throw DomainError(std::string(to_string(f)) + ": order outside the regime (" + std::string(validity(f)) + ")");
}

inline long integer_order(cplx mu, LimitFormula f) {
  require_regime(is_integer(mu), f);
  return static_cast<long>(mu.real());
}

}  // namespace detail

/// The closed-form approximant of the given formula at (mu, z).
inline cplx approx(LimitFormula f, cplx mu, cplx z) {
  if (!is_finite(mu) || !is_finite(z)) throw DomainError("approx: arguments must be finite");
  if (z == cplx{0.0, 0.0}) throw DomainError("approx: z must be nonzero");
  const bool slit = !is_integer(mu);
  if (slit && on_negative_real_axis(z)) throw DomainError("approx: z on the branch cut");
  switch (f) {
    case LimitFormula::ChiSmallZ:
      detail::require_regime(mu.real() <= -0.5 && !is_integer(mu), f);
      return principal_pow(0.5 * z, mu) * reciprocal_gamma(1.0 + mu);
    case LimitFormula::ChiLargeZ: {
      detail::require_regime(mu.real() <= -0.5 && !is_integer(mu), f);
      const OrderDecomposition d = decompose(mu);
      if (d.integral_part >= 0) throw DomainError("ChiLargeZ: <Re mu> must be negative");
      const cplx nu = d.fractional_part;
      const cplx ratio = gamma_ratio({nu - 0.5, mu + nu});
      return i_pow(1 + d.integral_part) / kSqrtPi * ratio * reciprocal_gamma(cplx{-static_cast<double>(d.integral_part), 0.0}) *
             principal_pow(2.0 * z, nu - 1.0) * std::exp(kI * z);
    }
    case LimitFormula::JSmallZ: {
      detail::require_regime(!is_nonpositive_integer(mu) || mu == cplx{0.0, 0.0}, f);
      const cplx power = is_integer(mu) ? int_pow(0.5 * z, static_cast<long>(mu.real())) : principal_pow(0.5 * z, mu);
      if (mu.real() > -0.5) {
        const OrderDecomposition d = decompose(mu);
        return power * reciprocal_gamma(cplx{1.0 + static_cast<double>(d.integral_part), 0.0}) *
               reciprocal_gamma(1.0 + d.fractional_part);
      }
      return power * reciprocal_gamma(1.0 + mu);
    }
    case LimitFormula::YSmallZGeneric: {
      detail::require_regime(!is_integer(mu) && mu.real() != 0.0, f);
      const double sgn = order_sign(mu);
      const cplx a = sgn * mu;
      return sgn * neumann_sign_factor(mu) / kPi * gamma(a) * principal_pow(2.0 / z, a);
    }
    case LimitFormula::YSmallZInteger: {
      const long m = detail::integer_order(mu, f);
      detail::require_regime(m != 0, f);
      const long am = std::labs(m);
      return -i_pow(m - am) / kPi * std::tgamma(static_cast<double>(am)) * int_pow(2.0 / z, am);
    }
    case LimitFormula::Y0SmallZ:
      detail::require_regime(mu == cplx{0.0, 0.0}, f);
      return 2.0 / kPi * (principal_log(0.5 * z) + kEulerGamma);
  }
  throw DomainError("approx: unknown formula");
}

/// Y0SmallZ with its series correction (4/pi) sum_k (iz/2)^k Gamma(2k)/(k!)^3.
inline cplx approx_y0_corrected(cplx z, int terms = 30) {
  cplx sum{};
  const cplx q = 0.5 * kI * z;
  cplx qk{1.0, 0.0};
  double kfact = 1.0;
  for (int k = 1; k <= terms; ++k) {
    qk *= q;
    kfact *= k;
    sum += qk * std::tgamma(2.0 * k) / (kfact * kfact * kfact);
  }
  return approx(LimitFormula::Y0SmallZ, 0.0, z) + 4.0 / kPi * sum;
}

struct LimitRatio {
  cplx z{};
  cplx approximant{};
  cplx full{};
  cplx ratio{};
};

struct LimitOptions {
  bool y0_series_correction = false;
};

/// Full evaluation behind each approximant.
inline cplx limit_full_value(LimitFormula f, cplx mu, cplx z, const EvalConfig& cfg) {
  switch (f) {
    case LimitFormula::ChiSmallZ:
    case LimitFormula::ChiLargeZ: return corrective_chi(mu, z, cfg).value;
    case LimitFormula::JSmallZ: return bessel_j(mu, z, cfg).value;
    case LimitFormula::YSmallZGeneric: return bessel_y(mu, z, cfg).value;
    case LimitFormula::YSmallZInteger:
    case LimitFormula::Y0SmallZ: return bessel_y_integer(static_cast<long>(mu.real()), z, cfg).value;
  }
  throw DomainError("limit_full_value: unknown formula");
}

/// full/approximant along z_sequence.
inline std::vector<LimitRatio> ratio_convergence_test(LimitFormula f, cplx mu, const std::vector<cplx>& z_sequence,
                                                      const EvalConfig& cfg = {}, const LimitOptions& opt = {}) {
  std::vector<LimitRatio> out;
  out.reserve(z_sequence.size());
  for (cplx z : z_sequence) {
    LimitRatio r;
    r.z = z;
    r.approximant = (f == LimitFormula::Y0SmallZ && opt.y0_series_correction)
                        ? (detail::require_regime(mu == cplx{0.0, 0.0}, f), approx_y0_corrected(z))
                        : approx(f, mu, z);
    r.full = limit_full_value(f, mu, z, cfg);
    r.ratio = r.full / r.approximant;
    out.push_back(r);
  }
  return out;
}

/// z_k = 10^{-k}, k = 1..count.
inline std::vector<cplx> small_z_sequence(int count = 4, cplx direction = 1.0) {
  std::vector<cplx> zs;
  for (int k = 1; k <= count; ++k) zs.push_back(direction * std::pow(10.0, -k));
  return zs;
}

/// z_k = 10 * 2^k, k = 1..count.
inline std::vector<cplx> large_z_sequence(int count = 4, cplx direction = 1.0) {
  std::vector<cplx> zs;
  for (int k = 1; k <= count; ++k) zs.push_back(direction * std::ldexp(10.0, k));
  return zs;
}

}  // namespace cylrep
