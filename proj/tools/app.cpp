#include "app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <utility>

#include "riesz_sharp/riesz_sharp.hpp"

namespace riesz::cli {
namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void parse_grid(const std::string& text, RunConfig& cfg) {
  const auto x = text.find_first_of("xX");
  try {
    std::size_t used = 0;
    if (x == std::string::npos) {
      const unsigned long long m = std::stoull(text, &used);
      if (used != text.size()) throw UsageError("bad --grid");
      cfg.n_r = cfg.n_t = static_cast<std::size_t>(m);
    } else {
      const std::string a = text.substr(0, x), b = text.substr(x + 1);
      cfg.n_r = static_cast<std::size_t>(std::stoull(a, &used));
      if (used != a.size()) throw UsageError("bad --grid");
      cfg.n_t = static_cast<std::size_t>(std::stoull(b, &used));
      if (used != b.size()) throw UsageError("bad --grid");
    }
  } catch (const std::logic_error&) {
    throw UsageError("--grid expects NxM or M, got '" + text + "'");
  }
  cfg.grid_given = true;
}

json report_header(const char* command) {
  json j;
  j["command"] = command;
  j["params"] = json::object();
  return j;
}

void finish(json& j, const RunConfig& cfg) {
  j["seed"] = cfg.seed;
  j["version"] = kVersion;
}

json scan_json(const minorants::ScanReport& rep) {
  json r;
  const auto& q = rep.rectangle;
  r["pass"] = rep.pass;
  r["tolerance"] = rep.tolerance;
  r["rectangle"] = {q.r_lo, q.r_hi, q.t_lo, q.t_hi};
  r["resolution"] = {rep.n_r, rep.n_t};
  return r;
}

// ---- constant -------------------------------------------------------------

json constant_row(const ParamSpace& ps, std::size_t cross_check) {
  const auto res = constants::lower_bound(ps, {.cross_check_points = cross_check});
  json row;
  row["p"] = ps.p();
  row["s"] = ps.s();
  row["value"] = ps.regime() != 0 ? constants::sharp_constant(ps) : res.value;
  row["case"] = res.case_label;
  if (res.t_tilde) row["t_tilde"] = *res.t_tilde;
  row["minimizer_t"] = res.minimizer_t;
  row["effective_p"] = res.effective_p;
  row["regime"] = ps.regime();
  row["status"] = constants::to_string(constants::status(ps, res));
  return row;
}

int cmd_constant(const RunConfig& cfg, json& j, std::ostream&) {
  const ParamSpace ps(cfg.p, cfg.s.value_or(cfg.p));
  j["params"] = {{"p", ps.p()}, {"s", ps.s()}};
  json row = constant_row(ps, constants::LowerBoundOptions{}.cross_check_points);
  row.erase("p");
  row.erase("s");
  j["result"] = row;
  return kExitPass;
}

// ---- ratio ----------------------------------------------------------------

int cmd_ratio(const RunConfig& cfg, json& j, std::ostream&) {
  const ParamSpace ps(cfg.p, cfg.s.value_or(cfg.p));
  json bound;
  const auto lb = constants::lower_bound(ps, {.cross_check_points = 0});
  bound["value"] = ps.regime() != 0 ? constants::sharp_constant(ps) : lb.value;
  bound["status"] = constants::to_string(constants::status(ps, lb));

  if (cfg.degree) {
    const std::size_t M = cfg.grid_given ? cfg.n_r : kDefaultGridSize;
    riesz::detail::require(*cfg.degree >= 0, "--degree must be >= 0");
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss;
    const auto d = static_cast<std::size_t>(*cfg.degree);
    std::vector<cplx> coeffs(2 * d + 1);
    for (auto& c : coeffs) {
      const double re = gauss(rng);
      c = {re, gauss(rng)};
    }
    const TrigPoly f(d, std::move(coeffs));
    j["params"] = {{"p", ps.p()}, {"s", ps.s()}, {"degree", d}, {"grid", M}};
    json r;
    r["ratio"] = fourier::reverse_ratio(f, ps, M);
    r["bound"] = bound;
    j["result"] = r;
    return kExitPass;
  }

  const double gamma =
      cfg.gamma.value_or(ps.p() <= 2.0 ? kPi / (2.0 * ps.p()) - 1e-3 : kPi / ps.p() - 1e-3);
  const std::size_t M = cfg.grid_given ? cfg.n_r : (std::size_t{1} << 16);
  const testfam::TestFamilyParams tp{cfg.alpha, cfg.beta, gamma, cfg.rho};
  j["params"] = {{"p", ps.p()},        {"s", ps.s()},     {"alpha", tp.alpha}, {"beta", tp.beta},
                 {"gamma", tp.gamma}, {"rho", tp.rho}, {"grid", M}};
  const auto lr = testfam::limit_ratio(tp, ps, M);
  json r;
  r["empirical"] = lr.empirical;
  r["closed_form"] = lr.closed_form;
  r["deviation"] = lr.deviation;
  r["bound"] = bound;
  j["result"] = r;
  return kExitPass;
}

// ---- verify ---------------------------------------------------------------

struct Suite {
  minorants::ScanReport report;
  bool in_regime = true;
  bool has_argmax = true;
  json extra;
};

Suite run_aux(double p, double tol) {
  Suite out;
  out.has_argmax = false;
  json margins;
  double worst = std::numeric_limits<double>::infinity();
  auto add = [&](const char* name, double m) {
    margins[name] = m;
    worst = std::min(worst, m);
  };
  if (p <= 2.0) {
    const auto m5 = minorants::section5_aux(p);
    if (p >= 4.0 / 3.0) add("section5_upper", m5.upper);
    if (p <= 4.0 / 3.0) add("section5_lower", m5.lower);
  }
  if (p >= 9.0 && p <= 40.0) {
    const auto m6 = minorants::section6_aux(p);
    add("r_p", m6.margin_rp);
    if (m6.margin_c) add("r_p_table_c", *m6.margin_c);
    add("A", m6.margin_A);
    if (m6.margin_Ac) add("A_table_c", *m6.margin_Ac);
    add("L", m6.margin_L);
    add("L_monotone", m6.margin_L_monotone);
    if (m6.margin_h) add("h", *m6.margin_h);
  }
  const auto mono = minorants::aux_monotone_checks(p);
  add("monotone_bound", mono.bound);
  add("monotone_sign", mono.sign);
  add("monotone_order", mono.monotone);
  out.report.max_gap = -worst;
  out.report.tolerance = tol;
  out.report.pass = -worst <= tol;
  out.report.rectangle = {p, p, 0.0, 0.0};
  out.report.n_r = out.report.n_t = 1;
  out.in_regime = p <= 2.0 || p >= 9.0;
  out.extra["margins"] = margins;
  return out;
}

Suite run_suite(const RunConfig& cfg, json& params) {
  using namespace minorants;
  const double p = cfg.p, tol = cfg.tolerance;
  params["ineq"] = cfg.ineq;
  params["p"] = p;
  params["grid"] = {cfg.n_r, cfg.n_t};
  params["tol"] = tol;
  Suite out;
  if (cfg.ineq == "eq3") {
    const ParamSpace ps(p, cfg.s.value_or(p));
    params["s"] = ps.s();
    out.report = scan(Field::kLemma31Reduced, ps, cfg.n_r, cfg.n_t, tol);
    out.in_regime = ps.analytic_regime();
  } else if (cfg.ineq == "eq4") {
    const ParamSpace ps(p, p / (p - 1.0));
    params["s"] = ps.s();
    out.report = scan(Field::kLemma32Reduced, ps, cfg.n_r, cfg.n_t, tol);
    out.in_regime = p >= 9.0;
  } else if (cfg.ineq == "r1") {
    out.report = scan_interval([p](double t) { return -boundary_r1_case_p_lt2(t, p); },
                               kPi / (2.0 * p) * 1e-2, kPi / 2, cfg.n_r, tol);
  } else if (cfg.ineq == "sec5") {
    out.report = scan_interval([p](double r) { return section5_phi(r, p); }, 0.0, 1.0, cfg.n_r, tol);
  } else if (cfg.ineq == "sec6") {
    out.report = scan_interval([p](double r) { return section6_phi(r, p); }, 0.0, 1.0, cfg.n_r, tol);
    out.in_regime = p >= 9.0;
  } else if (cfg.ineq == "stat3") {
    const ParamSpace ps(p, cfg.s.value_or(p));
    params["s"] = ps.s();
    out.report = scan_rectangle(
        [&ps](double r, double t) { return -stationary_gap3(r, t, ps); },
        {0.0, 1.0, 0.0, kPi - kPi / p}, cfg.n_r, cfg.n_t, tol);
  } else if (cfg.ineq == "stat4") {
    out.report = scan_rectangle([p](double r, double t) { return -stationary_gap4(r, t, p); },
                                {0.0, 1.0, 0.0, kPi / p}, cfg.n_r, cfg.n_t, tol);
    out.in_regime = p >= 9.0;
  } else if (cfg.ineq == "aux") {
    out = run_aux(p, tol);
  } else {
    throw UsageError("unknown --ineq '" + cfg.ineq + "'");
  }
  return out;
}

int cmd_verify(const RunConfig& cfg, json& j, std::ostream& err) {
  json params;
  const Suite suite = run_suite(cfg, params);
  j["params"] = params;
  json result = scan_json(suite.report);
  result["regime"] = suite.in_regime ? "in-regime" : "out-of-regime";
  for (auto it = suite.extra.begin(); it != suite.extra.end(); ++it) result[it.key()] = it.value();
  j["result"] = result;
  j["max_gap"] = std::isnan(suite.report.max_gap) ? json(nullptr) : json(suite.report.max_gap);
  if (suite.has_argmax) j["argmax"] = {suite.report.argmax_r, suite.report.argmax_t};
  if (!suite.in_regime) err << "out-of-regime: result advisory\n";
  if (!suite.report.pass) {
    err << "violation: max_gap " << fmt17(suite.report.max_gap);
    if (suite.has_argmax)
      err << " at (" << fmt17(suite.report.argmax_r) << ", " << fmt17(suite.report.argmax_t) << ")";
    err << "\n";
  }
  return suite.report.pass ? kExitPass : kExitViolation;
}

// ---- sweep ----------------------------------------------------------------

std::vector<double> lattice(double lo, double hi, double step, const char* name) {
  if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi))
    throw UsageError(std::string("sweep: ") + name + " bounds must be finite with step > 0");
  std::vector<double> out;
  const double slack = 1e-9 * step;
  for (std::size_t i = 0;; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    if (v > hi + slack) break;
    out.push_back(v);
  }
  return out;
}

int cmd_sweep(const RunConfig& cfg, json& j, std::ostream&) {
  j["params"] = {{"p_min", cfg.p_min}, {"p_max", cfg.p_max}, {"p_step", cfg.p_step}};
  if (cfg.s_equals_p) {
    j["params"]["s_equals_p"] = true;
  } else {
    j["params"]["s_min"] = cfg.s_min;
    j["params"]["s_max"] = cfg.s_max;
    j["params"]["s_step"] = cfg.s_step;
  }
  const auto ps_list = lattice(cfg.p_min, cfg.p_max, cfg.p_step, "p");
  std::vector<double> s_list;
  if (!cfg.s_equals_p) s_list = lattice(cfg.s_min, cfg.s_max, cfg.s_step, "s");
  json rows = json::array();
  for (double p : ps_list) {
    if (cfg.s_equals_p) {
      rows.push_back(constant_row(ParamSpace(p, p), 100'000));
    } else {
      for (double s : s_list) rows.push_back(constant_row(ParamSpace(p, s), 100'000));
    }
  }
  j["result"] = {{"rows", rows}};
  return kExitPass;
}

std::string sweep_csv(const json& j) {
  std::string out = "p,s,value,case,t_tilde,status\n";
  for (const auto& row : j["result"]["rows"]) {
    out += fmt17(row["p"].get<double>()) + "," + fmt17(row["s"].get<double>()) + "," +
           fmt17(row["value"].get<double>()) + "," + std::to_string(row["case"].get<int>()) + ",";
    if (row.contains("t_tilde")) out += fmt17(row["t_tilde"].get<double>());
    out += "," + row["status"].get<std::string>() + "\n";
  }
  return out;
}

// ---- psh-test -------------------------------------------------------------

int cmd_psh(const RunConfig& cfg, json& j, std::ostream& err) {
  minorants::Minorant which;
  if (cfg.which == "phi1") which = minorants::Minorant::kPhi1;
  else if (cfg.which == "phi2") which = minorants::Minorant::kPhi2;
  else throw UsageError("--which must be phi1 or phi2");
  const minorants::PshSuiteOptions opt{cfg.trials, cfg.seed, cfg.radius, cfg.samples, 2.0};
  j["params"] = {{"which", cfg.which}, {"p", cfg.p},           {"trials", cfg.trials},
                 {"radius", cfg.radius}, {"samples", cfg.samples}};
  const auto rep = minorants::psh_random_suite(which, cfg.p, opt);
  json r;
  r["pass"] = rep.pass();
  r["trials"] = rep.trials;
  r["failures"] = rep.failures;
  r["worst_scaled_margin"] = rep.worst_scaled_margin;
  r["worst_center"] = {rep.worst_z.real(), rep.worst_z.imag(), rep.worst_w.real(), rep.worst_w.imag()};
  j["result"] = r;
  if (!rep.pass()) err << "violation: " << rep.failures << " of " << rep.trials << " line tests\n";
  return rep.pass() ? kExitPass : kExitViolation;
}

// ---- output ---------------------------------------------------------------

void flatten(const json& v, const std::string& key, std::string& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), out);
    return;
  }
  if (v.is_array() && !v.empty() && v.front().is_object()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], key + "[" + std::to_string(i) + "]", out);
    return;
  }
  out += key + ":";
  auto scalar = [](const json& x) -> std::string {
    if (x.is_number_float()) return fmt17(x.get<double>());
    if (x.is_string()) return x.get<std::string>();
    if (x.is_null()) return "nan";
    return x.dump();
  };
  if (v.is_array()) {
    for (const auto& x : v) out += " " + scalar(x);
  } else {
    out += " " + scalar(v);
  }
  out += "\n";
}

std::string render(const json& j, const RunConfig& cfg) {
  switch (cfg.format) {
    case Format::kCsv:
      return sweep_csv(j);
    case Format::kText: {
      std::string out;
      flatten(j, "", out);
      return out;
    }
    case Format::kJson:
      break;
  }
  return j.dump(2) + "\n";
}

const char* command_name(Command c) {
  switch (c) {
    case Command::kConstant: return "constant";
    case Command::kRatio: return "ratio";
    case Command::kVerify: return "verify";
    case Command::kSweep: return "sweep";
    case Command::kPshTest: return "psh-test";
  }
  return "constant";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Sharp constants and pointwise inequality checks for the reverse Riesz projection bound",
               "riesz_sharp"};
  app.set_config("--config", "", "key=value file mirroring the long flags");
  app.require_subcommand(1);

  std::optional<double> s_opt;
  std::string grid_text, format_text = "json", output_text;
  std::optional<double> gamma_opt;
  std::optional<int> degree_opt;

  app.add_option("--p", cfg.p, "Lebesgue exponent p > 1");
  app.add_option("--s", s_opt, "aggregation exponent s > 0 (default: p)");
  app.add_option("--grid", grid_text, "NxM scan resolution, or M samples");
  app.add_option("--tol", cfg.tolerance, "pass tolerance for max_gap");
  app.add_option("--seed", cfg.seed, "seed for random suites");
  app.add_option("--format", format_text, "json, csv (sweep only) or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", output_text, "write the report to this path");
  app.add_flag("--timing", cfg.timing, "include elapsed_ms in the report");
  app.add_option("--ineq", cfg.ineq, "verify suite: eq3 eq4 r1 sec5 sec6 stat3 stat4 aux")
      ->check(CLI::IsMember({"eq3", "eq4", "r1", "sec5", "sec6", "stat3", "stat4", "aux"}));
  app.add_option("--alpha", cfg.alpha, "ratio: real-part weight");
  app.add_option("--beta", cfg.beta, "ratio: imaginary-part weight");
  app.add_option("--gamma", gamma_opt, "ratio: opening angle in (0, pi/2)");
  app.add_option("--rho", cfg.rho, "ratio: dilate radius in (0, 1)");
  app.add_option("--degree", degree_opt, "ratio: random polynomial of this degree instead");
  app.add_option("--p-min", cfg.p_min);
  app.add_option("--p-max", cfg.p_max);
  app.add_option("--p-step", cfg.p_step);
  app.add_option("--s-min", cfg.s_min);
  app.add_option("--s-max", cfg.s_max);
  app.add_option("--s-step", cfg.s_step);
  app.add_flag("--s-equals-p", cfg.s_equals_p, "sweep the diagonal s = p");
  app.add_option("--which", cfg.which, "psh-test: phi1 or phi2")
      ->check(CLI::IsMember({"phi1", "phi2"}));
  app.add_option("--trials", cfg.trials, "psh-test: number of random line tests");
  app.add_option("--radius", cfg.radius, "psh-test: circle radius at unit scale");
  app.add_option("--samples", cfg.samples, "psh-test: points per circle");

  struct Sub {
    const char* name;
    Command cmd;
    const char* help;
  };
  const Sub commands[] = {
      {"constant", Command::kConstant, "lower bound / sharp constant for (p, s)"},
      {"ratio", Command::kRatio, "test-family or random-polynomial ratio"},
      {"verify", Command::kVerify, "grid scan of one pointwise inequality"},
      {"sweep", Command::kSweep, "constants over a (p, s) lattice"},
      {"psh-test", Command::kPshTest, "random sub-mean-value tests of a minorant"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, cmd, help] : commands)
    subs[name] = app.add_subcommand(name, help)->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  for (const auto& [name, cmd, help] : commands)
    if (subs[name]->parsed()) cfg.command = cmd;
  cfg.s = s_opt;
  cfg.gamma = gamma_opt;
  cfg.degree = degree_opt;
  if (!output_text.empty()) cfg.output_path = output_text;
  cfg.format = format_text == "csv" ? Format::kCsv : format_text == "text" ? Format::kText : Format::kJson;

  const auto start = std::chrono::steady_clock::now();
  json report;
  int code = kExitPass;
  try {
    if (!grid_text.empty()) parse_grid(grid_text, cfg);
    if (!(cfg.tolerance > 0.0)) throw UsageError("--tol must be > 0");
    if (cfg.n_r < 2 || cfg.n_t < 2) throw UsageError("--grid dimensions must be >= 2");
    if (cfg.format == Format::kCsv && cfg.command != Command::kSweep)
      throw UsageError("--format csv is only available for sweep");
    report = report_header(command_name(cfg.command));
    switch (cfg.command) {
      case Command::kConstant: code = cmd_constant(cfg, report, err); break;
      case Command::kRatio: code = cmd_ratio(cfg, report, err); break;
      case Command::kVerify: code = cmd_verify(cfg, report, err); break;
      case Command::kSweep: code = cmd_sweep(cfg, report, err); break;
      case Command::kPshTest: code = cmd_psh(cfg, report, err); break;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClassificationError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitViolation;
  }
  finish(report, cfg);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (cfg.timing) report["elapsed_ms"] = elapsed_ms;
  err << "elapsed_ms: " << fmt17(elapsed_ms) << "\n";

  const std::string text = render(report, cfg);
  if (cfg.output_path) {
    std::ofstream f(*cfg.output_path, std::ios::binary);
    if (!(f << text)) {
      err << "error: cannot write " << *cfg.output_path << "\n";
      return kExitUsage;
    }
  } else {
    out << text;
  }
  return code;
}

}  // namespace riesz::cli
