// Command-line front end: eval, compare, limits, selftest.
//
// Exit codes: 0 success, 1 usage, 2 domain, 3 accuracy not met.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cylrep.hpp"

namespace {

using cylrep::cplx;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitAccuracy = 3;

json pair(cplx v) { return json::array({v.real(), v.imag()}); }

std::string show(cplx v) {
  return cylrep::format_double(v.real()) + (std::signbit(v.imag()) ? " - " : " + ") +
         cylrep::format_double(std::abs(v.imag())) + "i";
}

/// Flags shared by every subcommand that evaluates something.
struct ConfigFlags {
  std::string config_path;
  std::optional<double> abs_tol, rel_tol, max_abs_z;
  std::optional<std::size_t> max_nodes;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "key=value file overriding evaluation defaults");
    app->add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
    app->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
    app->add_option("--max-nodes", max_nodes, "quadrature node budget");
    app->add_option("--max-abs-z", max_abs_z, "largest accepted |z|");
  }

  /// Defaults, then the config file, then CYLREP_MAX_ABS_Z, then flags.
  cylrep::EvalConfig build() const {
    cylrep::EvalConfig cfg;
    if (!config_path.empty()) cylrep::cli::apply_config_file(cfg, config_path);
    cylrep::cli::apply_environment(cfg);
    if (abs_tol) cfg.quad_tol.abs_tol = *abs_tol;
    if (rel_tol) cfg.quad_tol.rel_tol = *rel_tol;
    if (max_nodes) cfg.quad_tol.max_nodes = *max_nodes;
    if (max_abs_z) cfg.max_abs_z = *max_abs_z;
    cfg.validate();
    return cfg;
  }
};

struct EvalArgs {
  std::string function;
  std::string mu = "0,0";
  std::string z;
  int n = 1;
  double theta = 0.0;
  bool json_out = false;
  ConfigFlags cfg;
};

int run_eval(const EvalArgs& a) {
  cylrep::FunctionSpec f = cylrep::parse_function(a.function, a.n);
  f.theta = a.theta;
  const cplx mu = cylrep::cli::parse_complex(a.mu);
  const cplx z = cylrep::cli::parse_complex(a.z);
  const cylrep::EvalConfig cfg = a.cfg.build();
  const cylrep::EvalResult r = cylrep::evaluate(f, mu, z, cfg);
  if (a.json_out) {
    json j = {{"function", cylrep::function_name(f)},
              {"mu", pair(mu)},
              {"z", pair(z)},
              {"value", pair(r.value)},
              {"error_estimate", r.error_estimate},
              {"trace", r.trace},
              {"nodes", r.nodes}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "value          " << show(r.value) << "\n"
              << "error_estimate " << cylrep::format_double(r.error_estimate) << "\n"
              << "trace          " << r.trace << "\n"
              << "nodes          " << r.nodes << "\n";
  }
  return kExitOk;
}

struct CompareArgs {
  std::string function = "J";
  std::optional<std::string> grid_mu, grid_z;
  int n = 1;
  double theta = 0.0;
  double tol = 1e-8;
  std::string out = "-";
  bool json_out = false;
  unsigned jobs = 1;
  ConfigFlags cfg;
};

json report_json(const cylrep::GridReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"mu", pair(r.mu)},
                    {"z", pair(r.z)},
                    {"fn", r.fn},
                    {"value", pair(r.value)},
                    {"oracle", pair(r.oracle)},
                    {"abs_err", r.abs_err},
                    {"rel_err", r.rel_err},
                    {"trace", r.trace},
                    {"nodes", r.nodes}});
  return {{"rows", rows},
          {"max_rel_err", report.max_rel_err()},
          {"mean_nodes", report.mean_nodes()},
          {"failures", report.failures()}};
}

int run_compare(const CompareArgs& a) {
  cylrep::FunctionSpec f = cylrep::parse_function(a.function, a.n);
  f.theta = a.theta;
  const auto mus = a.grid_mu ? cylrep::cli::parse_complex_list(*a.grid_mu) : cylrep::acceptance::order_grid();
  const auto zs = a.grid_z ? cylrep::cli::parse_complex_list(*a.grid_z) : cylrep::acceptance::argument_grid();
  const cylrep::EvalConfig cfg = a.cfg.build();
  const unsigned jobs = a.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.jobs;
  const cylrep::GridReport report = cylrep::compare_grid(f, mus, zs, cfg, jobs);

  std::ofstream file;
  const bool to_stdout = a.out == "-";
  if (!to_stdout) {
    file.open(a.out);
    if (!file) throw std::invalid_argument("cannot open output file '" + a.out + "'");
  }
  std::ostream& os = to_stdout ? std::cout : file;
  if (a.json_out) {
    os << report_json(report).dump(2) << "\n";
  } else {
    cylrep::write_csv(os, report);
  }
  if (!os) throw std::runtime_error("failed writing output");

  std::ostream& summary = to_stdout ? std::cerr : std::cout;
  summary << "rows " << report.rows.size() << ", max rel_err " << cylrep::format_double(report.max_rel_err())
          << ", mean nodes " << cylrep::format_double(report.mean_nodes()) << ", failed points "
          << report.failures() << "\n";
  return report.max_rel_err() > a.tol ? kExitAccuracy : kExitOk;
}

struct LimitsArgs {
  std::string formula;
  std::string mu = "0,0";
  int count = 4;
  std::string direction = "1,0";
  bool y0_correction = false;
  bool json_out = false;
  ConfigFlags cfg;
};

int run_limits(const LimitsArgs& a) {
  const cylrep::LimitFormula f = cylrep::parse_limit_formula(a.formula);
  const cplx mu = cylrep::cli::parse_complex(a.mu);
  const cplx dir = cylrep::cli::parse_complex(a.direction);
  if (a.count < 1) throw std::invalid_argument("--count must be positive");
  if (dir == cplx{0.0, 0.0}) throw std::invalid_argument("--direction must be nonzero");
  const bool large = f == cylrep::LimitFormula::ChiLargeZ;
  const auto zs = large ? cylrep::large_z_sequence(a.count, dir) : cylrep::small_z_sequence(a.count, dir);
  cylrep::EvalConfig cfg = a.cfg.build();
  if (large) cfg.max_abs_z = std::max(cfg.max_abs_z, std::abs(zs.back()) * 1.01);
  cylrep::LimitOptions opt;
  opt.y0_series_correction = a.y0_correction;
  const auto ratios = cylrep::ratio_convergence_test(f, mu, zs, cfg, opt);

  if (a.json_out) {
    json rows = json::array();
    for (const auto& r : ratios)
      rows.push_back({{"z", pair(r.z)},
                      {"approximant", pair(r.approximant)},
                      {"full", pair(r.full)},
                      {"ratio", pair(r.ratio)},
                      {"deviation", std::abs(r.ratio - 1.0)}});
    std::cout << json{{"formula", std::string(cylrep::to_string(f))}, {"mu", pair(mu)}, {"rows", rows}}.dump(2)
              << "\n";
  } else {
    std::cout << "# " << cylrep::to_string(f) << " mu=" << show(mu) << " (" << cylrep::validity(f) << ")\n"
              << "z_re,z_im,approx_re,approx_im,full_re,full_im,ratio_re,ratio_im,abs_ratio_minus_1\n";
    for (const auto& r : ratios) {
      std::cout << cylrep::format_double(r.z.real()) << ',' << cylrep::format_double(r.z.imag()) << ','
                << cylrep::format_double(r.approximant.real()) << ',' << cylrep::format_double(r.approximant.imag())
                << ',' << cylrep::format_double(r.full.real()) << ',' << cylrep::format_double(r.full.imag()) << ','
                << cylrep::format_double(r.ratio.real()) << ',' << cylrep::format_double(r.ratio.imag()) << ','
                << cylrep::format_double(std::abs(r.ratio - 1.0)) << "\n";
    }
  }
  return kExitOk;
}

struct SelftestArgs {
  bool json_out = false;
  ConfigFlags cfg;
};

int run_selftest(const SelftestArgs& a) {
  const cylrep::EvalConfig cfg = a.cfg.build();
  bool all = true;
  json results = json::array();
  for (const auto& criterion : cylrep::acceptance::criteria()) {
    const cylrep::acceptance::CriterionResult r = criterion(cfg);
    all = all && r.passed;
    if (a.json_out) {
      results.push_back({{"id", r.id},
                         {"title", r.title},
                         {"passed", r.passed},
                         {"worst", r.worst},
                         {"threshold", r.threshold},
                         {"detail", r.detail}});
    } else {
      std::cout << cylrep::acceptance::format(r) << std::endl;
    }
  }
  if (a.json_out) {
    std::cout << json{{"passed", all}, {"criteria", results}}.dump(2) << "\n";
  } else {
    std::cout << "# small-z J, informative:\n" << cylrep::acceptance::jsmallz_comparison(cfg);
  }
  return all ? kExitOk : kExitAccuracy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cylinder functions of complex order and argument from incomplete-gamma representations"};
  app.require_subcommand(1);

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one function at one point");
  eval_cmd->add_option("function", eval.function, "J, I, Y, H1, H2, K, jsph, ysph, dJ^n, dawson, erf")->required();
  eval_cmd->add_option("--mu", eval.mu, "order as re,im");
  eval_cmd->add_option("--z", eval.z, "argument as re,im")->required();
  eval_cmd->add_option("--n", eval.n, "derivative order for dJ");
  eval_cmd->add_option("--theta", eval.theta, "angle for erf(z cos(theta/2))");
  eval_cmd->add_flag("--json", eval.json_out, "machine-readable output");
  eval.cfg.attach(eval_cmd);

  CompareArgs compare;
  CLI::App* compare_cmd = app.add_subcommand("compare", "compare a function with its oracle on a grid");
  compare_cmd->add_option("function", compare.function, "function name (default J)");
  compare_cmd->add_option("--grid-mu", compare.grid_mu, "orders as re,im;re,im;...");
  compare_cmd->add_option("--grid-z", compare.grid_z, "arguments as re,im;re,im;...");
  compare_cmd->add_option("--n", compare.n, "derivative order for dJ");
  compare_cmd->add_option("--theta", compare.theta, "angle for erf(z cos(theta/2))");
  compare_cmd->add_option("--tol", compare.tol, "largest acceptable rel_err (exit 3 above it)");
  compare_cmd->add_option("--out", compare.out, "output path, - for stdout");
  compare_cmd->add_option("--jobs", compare.jobs, "worker threads, 0 for all cores");
  compare_cmd->add_flag("--json", compare.json_out, "JSON instead of CSV");
  compare.cfg.attach(compare_cmd);

  LimitsArgs limits;
  CLI::App* limits_cmd = app.add_subcommand("limits", "ratio of a limiting form to the full function");
  limits_cmd
      ->add_option("formula", limits.formula,
                   "ChiSmallZ, ChiLargeZ, JSmallZ, YSmallZGeneric, YSmallZInteger, Y0SmallZ")
      ->required();
  limits_cmd->add_option("--mu", limits.mu, "order as re,im");
  limits_cmd->add_option("--count", limits.count, "length of the z sequence");
  limits_cmd->add_option("--direction", limits.direction, "direction of the z sequence as re,im");
  limits_cmd->add_flag("--y0-correction", limits.y0_correction, "add the series correction to Y0SmallZ");
  limits_cmd->add_flag("--json", limits.json_out, "machine-readable output");
  limits.cfg.attach(limits_cmd);

  SelftestArgs selftest;
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run acceptance criteria 1-10");
  selftest_cmd->add_flag("--json", selftest.json_out, "machine-readable output");
  selftest.cfg.attach(selftest_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval);
    if (*compare_cmd) return run_compare(compare);
    if (*limits_cmd) return run_limits(limits);
    if (*selftest_cmd) return run_selftest(selftest);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const cylrep::AccuracyError& e) {
    std::cerr << "accuracy not met: " << e.what() << " (best estimate " << show(e.partial()) << ")\n";
    return kExitAccuracy;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAccuracy;
  }
  return kExitUsage;
}
