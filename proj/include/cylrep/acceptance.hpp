#pragma once

// Acceptance criteria 1-10, shared by the `selftest` command and the
// acceptance test binary. Each check returns its worst observed error and
// the threshold it is held to.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cylrep/cylinder.hpp"
#include "cylrep/fourier.hpp"
#include "cylrep/limits.hpp"
#include "cylrep/oracles.hpp"
#include "cylrep/spherical.hpp"

namespace cylrep::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double worst = 0.0;
  double threshold = 0.0;
  std::string detail;  // first failing point, or a note
};

inline std::vector<cplx> order_grid() {
  return {0.0, 0.3, -0.3, 0.7, -0.7, 1.5, -1.3, -2.5, -3.5, -4.2, {3.0, 3.0}, {-2.5, 0.4}, {-0.3, -1.1}};
}

inline std::vector<cplx> argument_grid() {
  return {0.5, 1.0, 2.0, 5.0, 10.0, std::polar(2.0, kPi / 4.0), std::polar(1.5, -2.0 * kPi / 5.0), {0.1, 3.0}};
}

namespace detail {

inline std::string point(const char* label, cplx mu, cplx z, double err) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s mu=(%.6g,%.6g) z=(%.6g,%.6g) err=%.3g", label, mu.real(), mu.imag(), z.real(),
                z.imag(), err);
  return buf;
}

/// Tracks the worst error and the first point that exceeded the threshold.
struct Tally {
  explicit Tally(double limit) : threshold(limit) {}
  double threshold;
  double worst = 0.0;
  bool failed = false;
  std::string detail;

  void add(double err, const std::string& where) {
    if (!(err <= worst)) worst = std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
    if (!(err <= threshold) && !failed) {
      failed = true;
      detail = where;
    }
  }
  void fail(const std::string& where) {
    worst = std::numeric_limits<double>::infinity();
    if (!failed) {
      failed = true;
      detail = where;
    }
  }
  CriterionResult result(int id, std::string title) const {
    return {id, std::move(title), !failed, worst, threshold, detail};
  }
};

template <class F>
void guarded(Tally& t, const std::string& where, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    t.fail(where + ": " + e.what());
  }
}

inline bool is_grid_integer(cplx mu) { return is_integer(mu); }

}  // namespace detail

/// 1. J against the power series on the full order x argument grid.
inline CriterionResult criterion1(const EvalConfig& cfg = {}) {
  detail::Tally t{1e-8};
  for (cplx mu : order_grid())
    for (cplx z : argument_grid())
      detail::guarded(t, detail::point("J", mu, z, 0), [&] {
        const cplx ref = oracle::series_j(mu, z).value;
        t.add(rel_err(bessel_j(mu, z, cfg).value, ref), detail::point("J", mu, z, rel_err(bessel_j(mu, z, cfg).value, ref)));
      });
  return t.result(1, "J oracle equivalence");
}

/// 2. Power series against Schlafli's integral where Re z > 0.
inline CriterionResult criterion2() {
  detail::Tally t{1e-9};
  for (cplx mu : order_grid())
    for (cplx z : argument_grid()) {
      if (!(z.real() > 0.0)) continue;
      detail::guarded(t, detail::point("Schlafli", mu, z, 0), [&] {
        const double e = rel_err(oracle::schlafli_j(mu, z).value, oracle::series_j(mu, z).value);
        t.add(e, detail::point("Schlafli", mu, z, e));
      });
    }
  return t.result(2, "Schlafli cross-oracle");
}

/// 3. chi_m == 0 exactly, and J_m against Bessel's integral.
inline CriterionResult criterion3(const EvalConfig& cfg = {}) {
  detail::Tally t{1e-10};
  const std::vector<cplx> zs = {1.0, {0.0, 2.0}, {3.0, 1.0}};
  for (long m = -5; m <= 5; ++m)
    for (cplx z : zs)
      detail::guarded(t, detail::point("chi", double(m), z, 0), [&] {
        const EvalResult chi = corrective_chi(double(m), z, cfg);
        if (chi.value != cplx{0.0, 0.0}) t.fail(detail::point("chi nonzero", double(m), z, std::abs(chi.value)));
      });
  for (long m = 0; m <= 5; ++m)
    for (cplx z : zs)
      detail::guarded(t, detail::point("J_m", double(m), z, 0), [&] {
        const double e = rel_err(bessel_j(double(m), z, cfg).value, oracle::classical_integral_j(m, z).value);
        t.add(e, detail::point("J_m", double(m), z, e));
      });
  return t.result(3, "integer reductions");
}

/// 4. c_mu = pi / 2^mu.
inline CriterionResult criterion4(const EvalConfig& cfg = {}) {
  detail::Tally t{1e-10};
  for (cplx mu : std::vector<cplx>{0.4, 1.3, 2.7, {1.1, 0.6}})
    detail::guarded(t, detail::point("c_mu", mu, 0.0, 0), [&] {
      const QuadratureResult q = c_mu_integral(mu, cfg);
      const cplx expect = kPi * std::exp(-mu * std::log(2.0));
      const double e = rel_err(q.value, expect);
      t.add(e, detail::point("c_mu", mu, 0.0, e));
    });
  return t.result(4, "c_mu identity");
}

/// 5. Recurrence of the regularized incomplete gamma function.
inline CriterionResult criterion5() {
  detail::Tally t{1e-10};
  for (cplx xi : std::vector<cplx>{0.3, -0.2, {0.0, 0.5}})
    for (int n : {1, 2, 5})
      for (cplx w : std::vector<cplx>{1.0, {0.0, 2.0}, {3.0, -1.0}})
        detail::guarded(t, detail::point("P", xi, w, 0), [&] {
          const double e = rel_err(p_recurrence_check(xi, n, w), regularized_p(xi + double(n), w));
          t.add(e, detail::point("P recurrence", xi, w, e));
        });
  return t.result(5, "P recurrence");
}

/// 6. Y, H1, H2 against oracles, and the J/Y/H identities.
inline CriterionResult criterion6(const EvalConfig& cfg = {}) {
  detail::Tally generic{1e-8}, integer{1e-6}, identity{1e-9};
  for (cplx mu : order_grid())
    for (cplx z : argument_grid())
      detail::guarded(generic, detail::point("Y/H", mu, z, 0), [&] {
        const EvalResult y = bessel_y(mu, z, cfg), h1 = hankel1(mu, z, cfg), h2 = hankel2(mu, z, cfg);
        const EvalResult j = bessel_j(mu, z, cfg);
        const double id = std::max(rel_err(h1.value + h2.value, 2.0 * j.value),
                                   rel_err(h1.value - h2.value, 2.0 * kI * y.value));
        identity.add(id, detail::point("identity", mu, z, id));
        if (detail::is_grid_integer(mu)) return;
        const double e = std::max({rel_err(y.value, oracle::oracle_y(mu, z).value),
                                   rel_err(h1.value, oracle::oracle_h(1, mu, z).value),
                                   rel_err(h2.value, oracle::oracle_h(2, mu, z).value)});
        generic.add(e, detail::point("Y/H", mu, z, e));
      });
  for (long m = -3; m <= 3; ++m)
    for (cplx z : argument_grid())
      detail::guarded(integer, detail::point("Y_m", double(m), z, 0), [&] {
        const cplx mu = double(m);
        const EvalResult y = bessel_y(mu, z, cfg), h1 = hankel1(mu, z, cfg), h2 = hankel2(mu, z, cfg);
        const EvalResult j = bessel_j(mu, z, cfg);
        const double e = std::max({rel_err(y.value, oracle::oracle_y(mu, z).value),
                                   rel_err(h1.value, oracle::oracle_h(1, mu, z).value),
                                   rel_err(h2.value, oracle::oracle_h(2, mu, z).value)});
        integer.add(e, detail::point("Y_m", mu, z, e));
        const double id = std::max(rel_err(h1.value + h2.value, 2.0 * j.value),
                                   rel_err(h1.value - h2.value, 2.0 * kI * y.value));
        identity.add(id, detail::point("identity", mu, z, id));
      });
  CriterionResult r = generic.result(6, "Y/H oracle equivalence");
  r.passed = r.passed && !integer.failed && !identity.failed;
  r.worst = std::max({generic.worst / generic.threshold, integer.worst / integer.threshold,
                      identity.worst / identity.threshold});
  r.threshold = 1.0;
  char buf[200];
  std::snprintf(buf, sizeof buf, "generic %.3g (<=1e-8), integer %.3g (<=1e-6), identities %.3g (<=1e-9)%s%s",
                generic.worst, integer.worst, identity.worst, r.passed ? "" : "; ",
                generic.failed ? generic.detail.c_str() : integer.failed ? integer.detail.c_str()
                                                                          : identity.detail.c_str());
  r.detail = buf;
  return r;
}

/// 7. Index symmetries of the Fourier coefficients at integer and half-integer nu.
inline CriterionResult criterion7(const EvalConfig& cfg = {}) {
  detail::Tally t{1.0};  // measured in units of 10x the quadrature tolerance
  for (cplx z : std::vector<cplx>{1.0, {2.0, 1.0}})
    for (long n = 0; n <= 2; ++n)
      for (long l = -4; l <= 4; ++l) {
        detail::guarded(t, detail::point("inv.int", double(n), z, 0), [&] {
          const auto a = fourier_coefficient(double(n), l, z, cfg);
          const auto b = fourier_coefficient(double(n), -l - 2 * n, z, cfg);
          const double scale = std::max(a.error_estimate + b.error_estimate,
                                        10.0 * std::max(cfg.quad_tol.abs_tol, cfg.quad_tol.rel_tol * std::abs(a.value)));
          const double e = std::abs(a.value - b.value) / scale;
          t.add(e, detail::point("integer symmetry", double(n), z, std::abs(a.value - b.value)));
        });
        detail::guarded(t, detail::point("inv.half", n + 0.5, z, 0), [&] {
          const auto a = fourier_coefficient(n + 0.5, l, z, cfg);
          const auto b = fourier_coefficient(n + 0.5, -l - 2 * n - 1, z, cfg);
          const double scale = std::max(a.error_estimate + b.error_estimate,
                                        10.0 * std::max(cfg.quad_tol.abs_tol, cfg.quad_tol.rel_tol * std::abs(a.value)));
          const double e = std::abs(a.value + b.value) / scale;
          t.add(e, detail::point("half-integer symmetry", n + 0.5, z, std::abs(a.value + b.value)));
        });
      }
  CriterionResult r = t.result(7, "Fourier index symmetries");
  r.detail = "ratio to 10x quadrature tolerance" + (r.detail.empty() ? std::string() : "; " + r.detail);
  return r;
}

/// 8. Spherical functions, Dawson duplication and the erf series.
inline CriterionResult criterion8(const EvalConfig& cfg = {}) {
  detail::Tally t{1e-8};
  for (long m = -3; m <= 3; ++m)
    for (cplx z : argument_grid())
      detail::guarded(t, detail::point("sph", double(m), z, 0), [&] {
        const cplx scale = std::sqrt(kPi / (2.0 * z));
        const cplx nu = m + 0.5;
        const double ej = rel_err(spherical_j(m, z, cfg).value, scale * oracle::series_j(nu, z).value);
        const double ey = rel_err(spherical_y(m, z, cfg).value, scale * oracle::oracle_y(nu, z).value);
        t.add(std::max(ej, ey), detail::point("spherical", double(m), z, std::max(ej, ey)));
      });
  for (cplx w : std::vector<cplx>{0.25, 0.5, 1.0, 1.5, {0.5, 0.3}})
    detail::guarded(t, detail::point("dup", 0.0, w, 0), [&] {
      const double e = rel_err(dawson_duplication(w), oracle::dawson_quadrature(2.0 * w).value);
      t.add(e, detail::point("duplication", 0.0, w, e));
    });
  for (cplx w : std::vector<cplx>{0.3, 1.0, 1.2, 2.0, 2.5, -1.7, {0.5, 0.5}, {1.5, -1.0}, {1.2, 1.2}})
    detail::guarded(t, detail::point("erf", 0.0, w, 0), [&] {
      const double e = rel_err(erf_series(w, 0.0, {}, cfg), oracle::erf_maclaurin(w).value);
      t.add(e, detail::point("erf series", 0.0, w, e));
    });
  return t.result(8, "spherical and Dawson corollaries");
}

/// Step of the central differences in criterion 9.
inline constexpr double kFiniteDifferenceStep = 1e-4;

/// Larger step for the n-th difference, 1e-4 * 10^{n-1}, reported alongside
/// criterion 9 because rounding in an n-th difference grows like eps / h^n.
inline double scaled_finite_difference_step(int n) { return kFiniteDifferenceStep * std::pow(10.0, n - 1); }

/// n-th central difference of J_mu along the real direction, one Richardson
/// level on steps h and h/2.
inline cplx finite_difference_derivative(cplx mu, cplx z, int n, double h, const EvalConfig& cfg) {
  auto central = [&](double step) {
    cplx sum{};
    double binom = 1.0;
    for (int j = 0; j <= n; ++j) {
      sum += sign_pow(j) * binom * bessel_j(mu, z + (0.5 * n - j) * step, cfg).value;
      binom = binom * (n - j) / (j + 1);
    }
    return sum / std::pow(step, n);
  };
  const cplx coarse = central(h), fine = central(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

/// 9. Derivatives against finite differences of J.
inline CriterionResult criterion9(const EvalConfig& cfg = {}) {
  detail::Tally t{1e-6};
  EvalConfig tight = cfg;
  tight.quad_tol.abs_tol = 1e-15;
  tight.quad_tol.rel_tol = 1e-14;
  double scaled_worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (cplx mu : std::vector<cplx>{0.0, -0.8, -2.3})
      for (cplx z : std::vector<cplx>{1.5, {2.0, 0.5}})
        detail::guarded(t, detail::point("dJ", mu, z, 0), [&] {
          const cplx exact = bessel_j_derivative(mu, z, n, cfg).value;
          const cplx fd = finite_difference_derivative(mu, z, n, kFiniteDifferenceStep, tight);
          const double e = rel_err(exact, fd);
          t.add(e, detail::point(("d^" + std::to_string(n) + "J").c_str(), mu, z, e));
          const cplx fd_scaled = finite_difference_derivative(mu, z, n, scaled_finite_difference_step(n), tight);
          scaled_worst = std::max(scaled_worst, rel_err(exact, fd_scaled));
        });
  CriterionResult r = t.result(9, "derivatives vs finite differences");
  char note[96];
  std::snprintf(note, sizeof note, "h=1e-4; with h=1e-4*10^(n-1) worst %.3g", scaled_worst);
  r.detail = note + (r.detail.empty() ? std::string() : "; " + r.detail);
  return r;
}

struct LimitCase {
  LimitFormula formula;
  cplx mu;
  double threshold;
  bool large_z;
  bool y0_correction;
};

inline std::vector<LimitCase> limit_cases() {
  return {
      {LimitFormula::ChiSmallZ, -1.7, 0.02, false, false},
      {LimitFormula::ChiSmallZ, {-2.5, 0.4}, 0.02, false, false},
      {LimitFormula::YSmallZGeneric, -1.7, 0.02, false, false},
      {LimitFormula::YSmallZGeneric, 0.3, 0.02, false, false},
      {LimitFormula::YSmallZGeneric, {2.3, 0.5}, 0.02, false, false},
      {LimitFormula::YSmallZInteger, 1.0, 0.02, false, false},
      {LimitFormula::YSmallZInteger, 2.0, 0.02, false, false},
      {LimitFormula::YSmallZInteger, -3.0, 0.02, false, false},
      {LimitFormula::Y0SmallZ, 0.0, 0.02, false, false},
      {LimitFormula::Y0SmallZ, 0.0, 0.01, false, true},
      {LimitFormula::ChiLargeZ, -2.3, 0.10, true, false},
      {LimitFormula::ChiLargeZ, -1.5, 0.10, true, false},
  };
}

/// 10. Limiting forms: |ratio - 1| non-increasing along the sequence and
/// below threshold at z = 1e-3 (|z| = 50 for the large-z form).
inline CriterionResult criterion10(const EvalConfig& cfg = {}) {
  detail::Tally t{1.0};  // measured in units of each case's threshold
  for (const LimitCase& c : limit_cases()) {
    EvalConfig local = cfg;
    const char* name = to_string(c.formula).data();
    detail::guarded(t, detail::point(name, c.mu, 0.0, 0), [&] {
      LimitOptions opt;
      opt.y0_series_correction = c.y0_correction;
      std::vector<cplx> seq = c.large_z ? large_z_sequence() : small_z_sequence();
      cplx gate = c.large_z ? cplx{50.0, 0.0} : cplx{1e-3, 0.0};
      if (c.large_z) local.max_abs_z = std::max(local.max_abs_z, 200.0);
      const auto ratios = ratio_convergence_test(c.formula, c.mu, seq, local, opt);
      for (std::size_t k = 2; k < ratios.size(); ++k) {
        const double prev = std::abs(ratios[k - 1].ratio - 1.0), cur = std::abs(ratios[k].ratio - 1.0);
        if (cur > prev * (1.0 + 1e-9)) t.fail(detail::point((std::string(name) + " not monotone").c_str(), c.mu, ratios[k].z, cur));
      }
      const auto at_gate = ratio_convergence_test(c.formula, c.mu, {gate}, local, opt);
      const double e = std::abs(at_gate[0].ratio - 1.0);
      t.add(e / c.threshold, detail::point(name, c.mu, gate, e));
    });
  }
  CriterionResult r = t.result(10, "limiting forms");
  r.detail = "ratio to per-formula threshold" + (r.detail.empty() ? std::string() : "; " + r.detail);
  return r;
}

/// Classical vs double-gamma small-z form of J for Re mu > -1/2. Informative.
inline std::string jsmallz_comparison(const EvalConfig& cfg = {}) {
  std::string out;
  for (cplx mu : std::vector<cplx>{0.3, 1.3, {2.7, 0.5}}) {
    const cplx z = 1e-3;
    const cplx full = bessel_j(mu, z, cfg).value;
    const double literal = std::abs(full / approx(LimitFormula::JSmallZ, mu, z) - 1.0);
    const double classical = std::abs(full / (principal_pow(0.5 * z, mu) * reciprocal_gamma(1.0 + mu)) - 1.0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "mu=(%g,%g): |ratio-1| double-gamma %.3g, classical %.3g\n", mu.real(), mu.imag(),
                  literal, classical);
    out += buf;
  }
  return out;
}

inline std::vector<std::function<CriterionResult(const EvalConfig&)>> criteria() {
  return {
      [](const EvalConfig& c) { return criterion1(c); }, [](const EvalConfig&) { return criterion2(); },
      [](const EvalConfig& c) { return criterion3(c); }, [](const EvalConfig& c) { return criterion4(c); },
      [](const EvalConfig&) { return criterion5(); },    [](const EvalConfig& c) { return criterion6(c); },
      [](const EvalConfig& c) { return criterion7(c); }, [](const EvalConfig& c) { return criterion8(c); },
      [](const EvalConfig& c) { return criterion9(c); }, [](const EvalConfig& c) { return criterion10(c); },
  };
}

/// One line per criterion: "[PASS] 1 J oracle equivalence: worst ... (threshold ...)".
inline std::string format(const CriterionResult& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "[%s] %d %s: worst %.3g (threshold %.3g)%s%s", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.worst, r.threshold, r.detail.empty() ? "" : " ", r.detail.c_str());
  return buf;
}

}  // namespace cylrep::acceptance
