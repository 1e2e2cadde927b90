#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gtoda/gt/verify.hpp"
#include "gtoda/numeric/checks.hpp"
#include "gtoda/report_json.hpp"
#include "gtoda/whittaker/verify.hpp"

namespace gtoda::cli {

/// Everything a run needs, after flags, config file and defaults are merged.
struct RunConfig {
  std::string command, subject;
  std::optional<int> n;
  std::vector<double> gamma, x;
  double c = 1.0;
  std::optional<double> grid_L, grid_step;
  double offset_scale = 4.0;
  std::string route = "direct";
  std::string gauge = "printed";
  std::string reference = "stated";
  double fd_step = 0;
  int k = 1;
  std::vector<double> lower, upper;
  int max_m = 6, samples = 100;
  std::uint64_t seed = 20240611;
  std::optional<double> scan_from, scan_to;
  int scan_points = 41;
  std::string out, format = "json";
  bool timing = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunResult {
  int exit_code = 0;
  Report report;
  std::string csv;  // wave scans in CSV form
};

namespace detail {

inline int require_n(const RunConfig& cfg, const std::string& what) {
  if (!cfg.n) throw UsageError(what + " needs --n");
  return *cfg.n;
}

inline numeric::SpectralParams spectral(const RunConfig& cfg) {
  numeric::SpectralParams p;
  p.n = cfg.n ? *cfg.n : static_cast<int>(cfg.gamma.size());
  p.gamma = cfg.gamma;
  p.c = cfg.c;
  if (cfg.gamma.empty()) throw UsageError("--gamma is required");
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

inline numeric::WaveOptions wave_options(const RunConfig& cfg, const numeric::SpectralParams& p) {
  numeric::WaveOptions opt;
  opt.offset_scale = cfg.offset_scale;
  if (cfg.grid_L || cfg.grid_step) {
    double m = 0;
    for (double g : p.gamma) m = std::max(m, std::abs(g));
    numeric::QuadratureGrid g = numeric::default_grid(p.c, m);
    if (cfg.grid_step) g.step = *cfg.grid_step;
    if (cfg.grid_L) g.L = *cfg.grid_L;
    try {
      g.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    opt.grid = g;
  }
  return opt;
}

inline void grid_metadata(Report& rep, const numeric::QuadratureGrid& g) {
  rep.metadata["grid.L"] = numeric::format_real(g.L, 17);
  rep.metadata["grid.step"] = numeric::format_real(g.step, 17);
  rep.metadata["grid.rule"] = "truncated trapezoid, step halving";
}

inline numeric::Route route(const RunConfig& cfg) {
  try {
    return numeric::parse_route(cfg.route);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline std::vector<double> positions_or_usage(const RunConfig& cfg, int n) {
  if (static_cast<int>(cfg.x.size()) != n)
    throw UsageError("--x needs " + std::to_string(n) + " values, got " + std::to_string(cfg.x.size()));
  return cfg.x;
}

inline Report run_verify(const RunConfig& cfg) {
  const std::string& s = cfg.subject;
  if (s == "serre") return gt::verify_serre(require_n(cfg, s));
  if (s == "tau") return gt::verify_tau(require_n(cfg, s));
  if (s == "lemma-a1") return gt::verify_lemma_a1(require_n(cfg, s));
  using namespace whittaker;
  const int n = require_n(cfg, s);
  if (s == "whittaker") {
    SimpleRootReference ref;
    if (cfg.reference == "stated") ref = SimpleRootReference::Stated;
    else if (cfg.reference == "derived") ref = SimpleRootReference::Derived;
    else throw UsageError("--reference must be stated or derived");
    std::vector<EigenReport> all;
    for (Side side : {Side::Left, Side::Right})
      for (Frame frame : {Frame::Gamma, Frame::Nu}) {
        auto v = verify_whittaker_eigen(n, side, frame, CocycleMutation::None, ref);
        all.insert(all.end(), v.begin(), v.end());
      }
    return to_report("verify whittaker n=" + std::to_string(n) + " reference=" + cfg.reference, all);
  }
  if (s == "j-action") return to_report("verify j-action n=" + std::to_string(n), verify_j_action(n));
  if (s == "cartan") {
    auto v = verify_cartan_action(n, Frame::Gamma);
    auto w = verify_cartan_action(n, Frame::Nu);
    v.insert(v.end(), w.begin(), w.end());
    return to_report("verify cartan n=" + std::to_string(n), v);
  }
  throw UsageError("unknown verify subject '" + s + "'");
}

inline Report run_check(const RunConfig& cfg) {
  const std::string& s = cfg.subject;
  Report rep;
  if (s == "a8") {
    if (cfg.max_m < 1 || cfg.samples < 1) throw UsageError("--m and --samples must be positive");
    return gt::verify_partial_fraction(cfg.max_m, cfg.samples, cfg.seed);
  }
  if (s == "toda") {
    const auto p = spectral(cfg);
    if (p.n > 2) throw UsageError("check toda supports rank 1 or 2");
    numeric::TodaCheckSpec t;
    t.params = p;
    t.x = positions_or_usage(cfg, p.n);
    t.fd_step = cfg.fd_step;
    if (cfg.gauge == "printed") t.gauge = numeric::Gauge::AsPrinted;
    else if (cfg.gauge == "tilde") t.gauge = numeric::Gauge::Tilde;
    else throw UsageError("--gauge must be printed or tilde");
    t.route = route(cfg);
    t.wave = wave_options(cfg, p);
    rep.command = "check toda";
    rep.records.push_back(numeric::check_toda_equation(t));
    rep.warnings = p.warnings();
    grid_metadata(rep, numeric::wave_grid(p, t.wave));
    rep.metadata["route"] = cfg.route;
    return rep;
  }
  if (s == "gustafson") {
    std::vector<numeric::GustafsonCase> cases;
    if (cfg.lower.empty() && cfg.upper.empty()) {
      cases.push_back({1, {0.4}, {-0.5, 0.9}, cfg.c});
      cases.push_back({2, {0.3, -0.8}, {0.5, -0.1, 1.2}, cfg.c});
    } else {
      numeric::GustafsonCase g;
      g.k = cfg.k;
      for (double v : cfg.lower) g.lower.push_back(v);
      for (double v : cfg.upper) g.upper.push_back(v);
      g.c = cfg.c;
      if (g.k < 1 || g.k > 2) throw UsageError("check gustafson supports k = 1, 2");
      if (static_cast<int>(g.lower.size()) != g.k || static_cast<int>(g.upper.size()) != g.k + 1)
        throw UsageError("--lower needs k values and --upper k+1 values");
      cases.push_back(g);
    }
    rep.command = "check gustafson";
    for (const auto& g : cases) rep.records.push_back(numeric::check_gustafson(g));
    return rep;
  }
  throw UsageError("unknown check subject '" + s + "'");
}

inline RunResult run_eval(const RunConfig& cfg) {
  if (cfg.subject != "wave") throw UsageError("unknown eval subject '" + cfg.subject + "'");
  const auto p = spectral(cfg);
  const auto opt = wave_options(cfg, p);
  std::vector<std::vector<double>> xs;
  if (cfg.scan_from || cfg.scan_to) {
    if (!cfg.scan_from || !cfg.scan_to || cfg.scan_points < 2 || !(*cfg.scan_to > *cfg.scan_from))
      throw UsageError("a scan needs --scan-from < --scan-to and --scan-points >= 2");
    std::vector<double> base = cfg.x.empty() ? std::vector<double>(p.n, 0.0) : positions_or_usage(cfg, p.n);
    for (int i = 0; i < cfg.scan_points; ++i) {
      base[0] = *cfg.scan_from + (*cfg.scan_to - *cfg.scan_from) * i / (cfg.scan_points - 1);
      xs.push_back(base);
    }
  } else {
    xs.push_back(positions_or_usage(cfg, p.n));
  }
  RunResult res;
  res.report.command = "eval wave";
  res.report.warnings = p.warnings();
  res.report.metadata["route"] = cfg.route;
  grid_metadata(res.report, numeric::wave_grid(p, opt));
  const auto samples = numeric::eval_wave_batch(p, xs, route(cfg), opt);
  std::ostringstream csv;
  csv.precision(17);
  csv << "x1" << (p.n >= 2 ? ",x2" : "") << ",re,im,err\n";
  for (const auto& w : samples) {
    CheckRecord r;
    std::ostringstream id;
    id.precision(17);
    id << "wave[x=";
    for (std::size_t i = 0; i < w.x.size(); ++i) id << (i ? "," : "") << w.x[i];
    id << "]";
    r.id = id.str();
    r.expected = "finite value";
    r.computed = numeric::format_complex(w.value, 17);
    r.residual = w.error_estimate;
    r.pass = std::isfinite(w.value.real()) && std::isfinite(w.value.imag());
    r.note = "route " + numeric::route_name(w.route);
    res.report.records.push_back(r);
    for (std::size_t i = 0; i < w.x.size() && i < 2; ++i) csv << w.x[i] << ",";
    csv << w.value.real() << "," << w.value.imag() << "," << w.error_estimate << "\n";
  }
  res.csv = csv.str();
  return res;
}

inline Report run_compare(const RunConfig& cfg) {
  if (cfg.subject != "routes") throw UsageError("unknown compare subject '" + cfg.subject + "'");
  const auto p = spectral(cfg);
  const auto x = positions_or_usage(cfg, p.n);
  const auto opt = wave_options(cfg, p);
  Report rep = numeric::compare_routes(p, x, opt).report;
  rep.command = "compare routes";
  rep.warnings = p.warnings();
  grid_metadata(rep, numeric::wave_grid(p, opt));
  return rep;
}

}  // namespace detail

/// Runs a parsed configuration. Usage problems throw UsageError (or gt::IndexRangeError).
inline RunResult execute(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult res;
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError("--format must be json or csv");
  if (cfg.format == "csv" && cfg.command != "eval") throw UsageError("csv output is only available for eval wave");
  if (cfg.command == "verify") res.report = detail::run_verify(cfg);
  else if (cfg.command == "check") res.report = detail::run_check(cfg);
  else if (cfg.command == "eval") res = detail::run_eval(cfg);
  else if (cfg.command == "compare") res.report = detail::run_compare(cfg);
  else throw UsageError("unknown command '" + cfg.command + "'");
  if (cfg.timing)
    res.report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.exit_code = res.report.all_pass() ? 0 : 1;
  return res;
}

inline void build_parser(CLI::App& app, RunConfig& cfg) {
  app.description("Gelfand-Tsetlin operators, Whittaker vectors and B_n Toda wave functions");
  app.set_config("--config", "", "TOML/INI file with option defaults (flags take precedence)");
  app.add_option("command", cfg.command, "verify | check | eval | compare")
      ->required()
      ->check(CLI::IsMember({"verify", "check", "eval", "compare"}));
  app.add_option("subject", cfg.subject,
                 "serre|tau|lemma-a1|whittaker|j-action|cartan, toda|gustafson|a8, wave, routes")
      ->required();
  app.add_option("--n,--rank", cfg.n, "so(N) size for serre/tau, rank n otherwise");
  app.add_option("--gamma", cfg.gamma, "spectral values g_{2n,i}")->delimiter(',');
  app.add_option("--c", cfg.c, "coupling c > 0");
  app.add_option("--x", cfg.x, "position x_1..x_n")->delimiter(',');
  app.add_option("--route", cfg.route, "direct | recursive | gustafson");
  app.add_option("--grid-L", cfg.grid_L, "truncation per axis");
  app.add_option("--grid-step", cfg.grid_step, "coarse trapezoid step (the value uses step/2)");
  app.add_option("--offset-scale", cfg.offset_scale, "contour heights of the gustafson route, in units of c/8");
  app.add_option("--gauge", cfg.gauge, "printed | tilde");
  app.add_option("--reference", cfg.reference, "simple-root character for verify whittaker: stated | derived");
  app.add_option("--fd-step", cfg.fd_step, "finite-difference step (default 0.01 c)");
  app.add_option("--k", cfg.k, "order of the Gustafson integral");
  app.add_option("--lower", cfg.lower, "row 2k-1 values for check gustafson")->delimiter(',');
  app.add_option("--upper", cfg.upper, "row 2k+1 values for check gustafson")->delimiter(',');
  app.add_option("--m", cfg.max_m, "largest m for check a8");
  app.add_option("--samples", cfg.samples, "random samples per m for check a8");
  app.add_option("--seed", cfg.seed, "random seed for check a8");
  app.add_option("--scan-from", cfg.scan_from, "scan x_1 from");
  app.add_option("--scan-to", cfg.scan_to, "scan x_1 to");
  app.add_option("--scan-points", cfg.scan_points, "number of scan points");
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--format", cfg.format, "json | csv");
  app.add_flag("--timing", cfg.timing, "record wall time in the report (makes it non-deterministic)");
}

inline bool emit(const RunResult& res, const RunConfig& cfg, std::ostream& out) {
  const std::string text = cfg.format == "csv" ? res.csv : dump_report(res.report);
  if (cfg.out.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(cfg.out);
  f << text;
  return static_cast<bool>(f);
}

/// Full command line run: 0 all pass, 1 a check failed or an evaluation error, 2 usage error.
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gtoda"};
  RunConfig cfg;
  build_parser(app, cfg);
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }
  RunResult res;
  try {
    res = execute(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const gt::IndexRangeError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const numeric::ContourError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    res.report.command = cfg.command + " " + cfg.subject;
    CheckRecord r;
    r.id = "error";
    r.expected = "successful evaluation";
    r.computed = e.what();
    res.report.records.push_back(r);
    res.exit_code = 1;
    err << "error: " << e.what() << "\n";
    RunConfig json_cfg = cfg;
    json_cfg.format = "json";
    emit(res, json_cfg, out);
    return 1;
  }
  if (!emit(res, cfg, out)) {
    err << "error: cannot write " << cfg.out << "\n";
    return 1;
  }
  return res.exit_code;
}

inline int run_command(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(std::move(args), out, err);
}

}  // namespace gtoda::cli
