#pragma once

// Parsing helpers for the command-line tool: complex literals, grids and
// key=value configuration.

#include <cstdlib>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylrep/config.hpp"

namespace cylrep::cli {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_real(const std::string& text, const std::string& context) {
  const std::string s = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw std::invalid_argument("cannot parse number '" + s + "' in " + context);
  return v;
}

inline bool parse_bool(const std::string& text, const std::string& key) {
  const std::string s = trim(text);
  if (s == "1" || s == "true" || s == "on" || s == "yes") return true;
  if (s == "0" || s == "false" || s == "off" || s == "no") return false;
  throw std::invalid_argument("cannot parse boolean '" + s + "' for " + key);
}

}  // namespace detail

/// "re,im" or "re" (imaginary part zero).
inline cplx parse_complex(const std::string& text) {
  const std::string s = detail::trim(text);
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {detail::parse_real(s, "'" + s + "'"), 0.0};
  if (s.find(',', comma + 1) != std::string::npos) throw std::invalid_argument("too many commas in '" + s + "'");
  return {detail::parse_real(s.substr(0, comma), "'" + s + "'"), detail::parse_real(s.substr(comma + 1), "'" + s + "'")};
}

/// "re,im;re,im;..." An empty or blank string is an empty grid.
inline std::vector<cplx> parse_complex_list(const std::string& text) {
  std::vector<cplx> out;
  if (detail::trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    const std::string item = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (!detail::trim(item).empty()) out.push_back(parse_complex(item));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

/// Applies one "key=value" setting. Keys: abs_tol, rel_tol, max_nodes,
/// switch_epsilon, max_abs_z, branch_check, max_sum_order.
inline void apply_setting(EvalConfig& cfg, const std::string& key_raw, const std::string& value) {
  const std::string key = detail::trim(key_raw);
  if (key == "abs_tol") cfg.quad_tol.abs_tol = detail::parse_real(value, key);
  else if (key == "rel_tol") cfg.quad_tol.rel_tol = detail::parse_real(value, key);
  else if (key == "max_nodes") {
    const double v = detail::parse_real(value, key);
    if (!(v >= 15.0)) throw std::invalid_argument("max_nodes must be at least 15");
    cfg.quad_tol.max_nodes = static_cast<std::size_t>(v);
  } else if (key == "switch_epsilon") cfg.switch_epsilon = detail::parse_real(value, key);
  else if (key == "max_abs_z") cfg.max_abs_z = detail::parse_real(value, key);
  else if (key == "branch_check") cfg.branch_check = detail::parse_bool(value, key);
  else if (key == "max_sum_order") cfg.max_sum_order = static_cast<int>(detail::parse_real(value, key));
  else throw std::invalid_argument("unknown configuration key '" + key + "'");
}

/// Reads key=value lines; blank lines and lines starting with '#' are skipped.
inline void apply_config_stream(EvalConfig& cfg, std::istream& in, const std::string& source = "config") {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = detail::trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(source + ":" + std::to_string(lineno) + ": expected key=value");
    apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
}

inline void apply_config_file(EvalConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  apply_config_stream(cfg, in, path);
}

/// CYLREP_MAX_ABS_Z, when set, replaces the |z| cap.
inline void apply_environment(EvalConfig& cfg) {
  if (const char* v = std::getenv("CYLREP_MAX_ABS_Z"); v && *v) cfg.max_abs_z = detail::parse_real(v, "CYLREP_MAX_ABS_Z");
}

}  // namespace cylrep::cli
