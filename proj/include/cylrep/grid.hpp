#pragma once

// Named-function dispatch, oracle comparison over (mu, z) grids, and the CSV
// form of the resulting report.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cylrep/cylinder.hpp"
#include "cylrep/oracles.hpp"
#include "cylrep/spherical.hpp"

namespace cylrep {

enum class FunctionKind { J, I, Y, H1, H2, K, SphericalJ, SphericalY, DerivativeJ, Dawson, Erf };

struct FunctionSpec {
  FunctionKind kind = FunctionKind::J;
  int derivative_order = 1;  // DerivativeJ only
  double theta = 0.0;        // Erf only: erf(z cos(theta/2))
};

/// Canonical name: J, I, Y, H1, H2, K, jsph, ysph, dJ^n, dawson, erf.
inline std::string function_name(const FunctionSpec& f) {
  switch (f.kind) {
    case FunctionKind::J: return "J";
    case FunctionKind::I: return "I";
    case FunctionKind::Y: return "Y";
    case FunctionKind::H1: return "H1";
    case FunctionKind::H2: return "H2";
    case FunctionKind::K: return "K";
    case FunctionKind::SphericalJ: return "jsph";
    case FunctionKind::SphericalY: return "ysph";
    case FunctionKind::DerivativeJ: return "dJ^" + std::to_string(f.derivative_order);
    case FunctionKind::Dawson: return "dawson";
    case FunctionKind::Erf: return "erf";
  }
  return "?";
}

/// Accepts the canonical names; "dJ" alone keeps derivative_order from
/// `fallback_order`.
inline FunctionSpec parse_function(const std::string& name, int fallback_order = 1) {
  FunctionSpec f;
  if (name == "J") f.kind = FunctionKind::J;
  else if (name == "I") f.kind = FunctionKind::I;
  else if (name == "Y") f.kind = FunctionKind::Y;
  else if (name == "H1") f.kind = FunctionKind::H1;
  else if (name == "H2") f.kind = FunctionKind::H2;
  else if (name == "K") f.kind = FunctionKind::K;
  else if (name == "jsph") f.kind = FunctionKind::SphericalJ;
  else if (name == "ysph") f.kind = FunctionKind::SphericalY;
  else if (name == "dawson") f.kind = FunctionKind::Dawson;
  else if (name == "erf") f.kind = FunctionKind::Erf;
  else if (name.rfind("dJ", 0) == 0) {
    f.kind = FunctionKind::DerivativeJ;
    std::string rest = name.substr(2);
    if (!rest.empty() && rest[0] == '^') rest = rest.substr(1);
    if (rest.empty()) {
      f.derivative_order = fallback_order;
    } else {
      std::size_t used = 0;
      int n = -1;
      try {
        n = std::stoi(rest, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != rest.size() || n < 0) throw std::invalid_argument("bad derivative order in '" + name + "'");
      f.derivative_order = n;
    }
  } else {
    throw std::invalid_argument("unknown function '" + name + "'");
  }
  return f;
}

namespace detail {

inline long spherical_order(cplx mu) {
  if (!is_integer(mu)) throw DomainError("spherical functions need an integer order m (mu = m + 0i)");
  return static_cast<long>(mu.real());
}

}  // namespace detail

/// Production evaluation of a named function. mu is ignored by dawson and erf.
inline EvalResult evaluate(const FunctionSpec& f, cplx mu, cplx z, const EvalConfig& cfg = {}) {
  switch (f.kind) {
    case FunctionKind::J: return bessel_j(mu, z, cfg);
    case FunctionKind::I: return bessel_i(mu, z, cfg);
    case FunctionKind::Y: return bessel_y(mu, z, cfg);
    case FunctionKind::H1: return hankel1(mu, z, cfg);
    case FunctionKind::H2: return hankel2(mu, z, cfg);
    case FunctionKind::K: return bessel_k(mu, z, cfg);
    case FunctionKind::SphericalJ: return spherical_j(detail::spherical_order(mu), z, cfg);
    case FunctionKind::SphericalY: return spherical_y(detail::spherical_order(mu), z, cfg);
    case FunctionKind::DerivativeJ: return bessel_j_derivative(mu, z, f.derivative_order, cfg);
    case FunctionKind::Dawson: return {dawson(z), 0.0, "dawson.1/direct", 0};
    case FunctionKind::Erf: return {erf_series(z, f.theta, {}, cfg), 0.0, "error.function/series", 0};
  }
  throw DomainError("evaluate: unknown function");
}

/// Independent reference value of a named function.
inline oracle::OracleResult evaluate_oracle(const FunctionSpec& f, cplx mu, cplx z) {
  switch (f.kind) {
    case FunctionKind::J: return oracle::series_j(mu, z);
    case FunctionKind::I: return oracle::series_i(mu, z);
    case FunctionKind::Y: return oracle::oracle_y(mu, z);
    case FunctionKind::H1: return oracle::oracle_h(1, mu, z);
    case FunctionKind::H2: return oracle::oracle_h(2, mu, z);
    case FunctionKind::K: return oracle::oracle_k(mu, z);
    case FunctionKind::SphericalJ:
    case FunctionKind::SphericalY: {
      const long m = detail::spherical_order(mu);
      if (z == cplx{0.0, 0.0}) throw DivergenceError("spherical oracle: z = 0");
      const cplx nu{static_cast<double>(m) + 0.5, 0.0};
      oracle::OracleResult r = f.kind == FunctionKind::SphericalJ ? oracle::series_j(nu, z) : oracle::oracle_y(nu, z);
      const cplx scale = std::sqrt(kPi / (2.0 * z));
      r.value *= scale;
      r.tail_bound *= std::abs(scale);
      return r;
    }
    case FunctionKind::DerivativeJ: return oracle::series_j_derivative(mu, z, f.derivative_order);
    case FunctionKind::Dawson: return oracle::dawson_quadrature(z);
    case FunctionKind::Erf: return oracle::erf_maclaurin(z * std::cos(0.5 * f.theta));
  }
  throw DomainError("evaluate_oracle: unknown function");
}

struct GridRow {
  cplx mu{};
  cplx z{};
  std::string fn;
  cplx value{};
  cplx oracle{};
  double abs_err = 0.0;
  double rel_err = 0.0;
  std::string trace;
  long nodes = 0;
};

struct GridReport {
  std::vector<GridRow> rows;

  /// Largest rel_err over rows without an error status; 0 when there are none.
  double max_rel_err() const {
    double m = 0.0;
    for (const auto& r : rows)
      if (std::isfinite(r.rel_err)) m = std::max(m, r.rel_err);
    return m;
  }
  double mean_nodes() const {
    if (rows.empty()) return 0.0;
    double s = 0.0;
    for (const auto& r : rows) s += static_cast<double>(r.nodes);
    return s / static_cast<double>(rows.size());
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : rows)
      if (r.trace.rfind("error:", 0) == 0) ++n;
    return n;
  }
};

inline constexpr const char* kCsvHeader =
    "mu_re,mu_im,z_re,z_im,fn,val_re,val_im,oracle_re,oracle_im,abs_err,rel_err,trace,nodes";

/// Error kind recorded in the trace column of a failed row.
inline std::string error_status(const std::exception& e) {
  if (dynamic_cast<const PoleError*>(&e)) return "error:pole";
  if (dynamic_cast<const DivergenceError*>(&e)) return "error:divergence";
  if (dynamic_cast<const DomainError*>(&e)) return "error:domain";
  if (dynamic_cast<const AccuracyError*>(&e)) return "error:accuracy";
  return "error:internal";
}

inline GridRow compare_point(const FunctionSpec& f, cplx mu, cplx z, const EvalConfig& cfg) {
  GridRow row;
  row.mu = mu;
  row.z = z;
  row.fn = function_name(f);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    const EvalResult r = evaluate(f, mu, z, cfg);
    const oracle::OracleResult o = evaluate_oracle(f, mu, z);
    row.value = r.value;
    row.oracle = o.value;
    row.abs_err = std::abs(r.value - o.value);
    row.rel_err = row.abs_err / std::max(1.0, std::abs(o.value));
    row.trace = r.trace;
    row.nodes = static_cast<long>(r.nodes);
  } catch (const std::exception& e) {
    row.value = row.oracle = {nan, nan};
    row.abs_err = row.rel_err = nan;
    row.trace = error_status(e);
    row.nodes = 0;
  }
  return row;
}

/// One row per (mu, z), mu-major. Points may be evaluated on several threads;
/// row order does not depend on it.
inline GridReport compare_grid(const FunctionSpec& f, const std::vector<cplx>& mus, const std::vector<cplx>& zs,
                               const EvalConfig& cfg = {}, unsigned jobs = 1) {
  cfg.validate();
  GridReport report;
  report.rows.resize(mus.size() * zs.size());
  const std::size_t total = report.rows.size();
  auto work = [&](std::size_t i) { report.rows[i] = compare_point(f, mus[i / zs.size()], zs[i % zs.size()], cfg); };
  if (jobs <= 1 || total < 2) {
    for (std::size_t i = 0; i < total; ++i) work(i);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, total));
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) work(i);
    });
  for (auto& th : pool) th.join();
  return report;
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_csv(std::ostream& os, const GridReport& report) {
  os << kCsvHeader << '\n';
  for (const auto& r : report.rows) {
    os << format_double(r.mu.real()) << ',' << format_double(r.mu.imag()) << ',' << format_double(r.z.real()) << ','
       << format_double(r.z.imag()) << ',' << r.fn << ',' << format_double(r.value.real()) << ','
       << format_double(r.value.imag()) << ',' << format_double(r.oracle.real()) << ','
       << format_double(r.oracle.imag()) << ',' << format_double(r.abs_err) << ',' << format_double(r.rel_err) << ','
       << r.trace << ',' << r.nodes << '\n';
  }
}

namespace detail {

inline double parse_csv_double(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') throw std::invalid_argument("CSV: bad number '" + s + "'");
  return v;
}

}  // namespace detail

/// Inverse of write_csv.
inline GridReport read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw std::invalid_argument("CSV: missing or wrong header");
  GridReport report;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 13) throw std::invalid_argument("CSV: expected 13 fields, got " + std::to_string(cells.size()));
    GridRow r;
    auto d = [&](int i) { return detail::parse_csv_double(cells[static_cast<std::size_t>(i)]); };
    r.mu = {d(0), d(1)};
    r.z = {d(2), d(3)};
    r.fn = cells[4];
    r.value = {d(5), d(6)};
    r.oracle = {d(7), d(8)};
    r.abs_err = d(9);
    r.rel_err = d(10);
    r.trace = cells[11];
    r.nodes = std::stol(cells[12]);
    report.rows.push_back(std::move(r));
  }
  return report;
}

namespace detail {

inline bool same_bits(double a, double b) {
  return (std::isnan(a) && std::isnan(b)) || (a == b && std::signbit(a) == std::signbit(b));
}
inline bool same_bits(cplx a, cplx b) { return same_bits(a.real(), b.real()) && same_bits(a.imag(), b.imag()); }

}  // namespace detail

/// Field-by-field equality, NaN equal to NaN.
inline bool identical(const GridReport& a, const GridReport& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto &x = a.rows[i], &y = b.rows[i];
    if (!detail::same_bits(x.mu, y.mu) || !detail::same_bits(x.z, y.z) || x.fn != y.fn ||
        !detail::same_bits(x.value, y.value) || !detail::same_bits(x.oracle, y.oracle) ||
        !detail::same_bits(x.abs_err, y.abs_err) || !detail::same_bits(x.rel_err, y.rel_err) || x.trace != y.trace ||
        x.nodes != y.nodes)
      return false;
  }
  return true;
}

}  // namespace cylrep
