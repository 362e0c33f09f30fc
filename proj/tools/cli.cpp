#include "cli.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <span>
#include <sstream>
#include <utility>

#include "dal/dynamics.hpp"
#include "dal/entanglement.hpp"
#include "dal/error.hpp"
#include "dal/explore.hpp"
#include "dal/format.hpp"
#include "dal/serialization.hpp"
#include "dal/spectral.hpp"
#include "dal/steady.hpp"

namespace dal::cli {

namespace detail {
std::span<const std::pair<std::string_view, std::string_view>> presets();
}  // namespace detail

namespace {

constexpr const char* kToolVersion = DAL_VERSION;

/// Anything wrong with the invocation or the configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads an object while tracking consumed keys so leftovers can be rejected.
class Reader {
 public:
  Reader(const Json& obj, std::string where) : obj_(obj), where_(std::move(where)) {
    if (!obj_.is_object()) fail("expected a JSON object");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(where_.empty() ? what : where_ + ": " + what);
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  const Json& raw(const std::string& key) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    if (it == obj_.end()) fail("missing key '" + key + "'");
    return *it;
  }

  double number(const std::string& key) {
    const Json& v = raw(key);
    if (!v.is_number()) fail("key '" + key + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail("key '" + key + "' must be finite");
    return x;
  }

  double number_or(const std::string& key, double fallback) {
    return has(key) ? number(key) : fallback;
  }

  std::size_t count(const std::string& key) {
    const Json& v = raw(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      fail("key '" + key + "' must be a non-negative integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
  }

  std::size_t count_or(const std::string& key, std::size_t fallback) {
    return has(key) ? count(key) : fallback;
  }

  std::string text(const std::string& key) {
    const Json& v = raw(key);
    if (!v.is_string()) fail("key '" + key + "' must be a string");
    return v.get<std::string>();
  }

  std::string text_or(const std::string& key, std::string fallback) {
    return has(key) ? text(key) : std::move(fallback);
  }

  Reader child(const std::string& key) { return Reader(raw(key), qualified(key)); }

  std::string qualified(const std::string& key) const {
    return where_.empty() ? key : where_ + "." + key;
  }

  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!seen_.contains(key)) fail("unknown key '" + key + "'");
    }
  }

 private:
  const Json& obj_;
  std::string where_;
  std::set<std::string> seen_;
};

// Converts library validation errors raised while reading config into
// ConfigError with the location prefixed.
template <typename F>
auto at(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

struct Outcome {
  std::string payload;
  Json summary = Json::object();
  Json failures = Json::array();
};

/// A fully validated command: its normalized config and the computation.
struct Plan {
  Json config;
  std::function<Outcome(std::size_t jobs)> compute;
};

struct Invocation {
  std::string command;
  std::string config_path;
  std::string preset;
  std::string out;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
  bool dry_run = false;
};

Json axis_json(const Axis& a) {
  return Json{{"min", a.min}, {"max", a.max}, {"points", a.points}};
}

Axis read_axis(Reader& parent, const std::string& key, Axis fallback) {
  if (!parent.has(key)) return fallback;
  Reader r = parent.child(key);
  Axis a{r.number("min"), r.number("max"), r.count("points")};
  r.finish();
  at(r.qualified(""), [&] { return a.values(); });
  return a;
}

Json failures_json(const std::vector<PointFailure>& failures) {
  Json out = Json::array();
  for (const auto& f : failures) out.push_back(Json{{"index", f.index}, {"message", f.message}});
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- steady ---------------------------------------------------------------

Plan plan_steady(Reader& cfg) {
  const ModelParams p = at("params", [&] { return params_from_json(cfg.raw("params")); });
  if (!(p.gamma > 0.0) || !(p.gamma_c > 0.0)) {
    cfg.fail("params: gamma and gamma_c must be positive for a unique steady state");
  }
  cfg.finish();
  Plan plan;
  plan.config = Json{{"command", "steady"}, {"params", to_json(p)}};
  plan.compute = [p](std::size_t) {
    const auto st = steady_state(p);
    const auto spectrum = hamiltonian_spectrum(p);
    const auto f = fidelities(st.rho, spectrum);
    const double n = negativity(partial_trace_c(st.rho));
    Outcome o;
    o.payload = dump(Json{{"params", to_json(p)},
                          {"negativity", n},
                          {"residual", st.residual},
                          {"gap", st.nullspace_gap},
                          {"min_eigenvalue", st.min_eigenvalue},
                          {"fidelities", f.values},
                          {"eigenenergies", spectrum.energies}});
    o.summary = Json{{"negativity", n}, {"argmax_fidelity", f.argmax()}};
    return o;
  };
  return plan;
}

// ---- sweep ----------------------------------------------------------------

Plan plan_sweep(Reader& cfg) {
  const ModelParams tmpl =
      at("params", [&] { return template_from_json(cfg.raw("params"), {"omega_c", "j_c"}); });
  const Axis w = read_axis(cfg, "omega_c", {-1.0, 1.0, 201});
  const Axis jc = read_axis(cfg, "j_c", {0.0, 1.0, 201});
  cfg.finish();
  Plan plan;
  plan.config = Json{{"command", "sweep"},
                     {"params", template_to_json(tmpl, {"omega_c", "j_c"})},
                     {"omega_c", axis_json(w)},
                     {"j_c", axis_json(jc)}};
  plan.compute = [tmpl, w, jc](std::size_t jobs) {
    const auto grid = sweep_2d(tmpl, w, jc, jobs);
    Outcome o;
    std::ostringstream csv;
    write_sweep_csv(csv, grid);
    o.payload = csv.str();
    o.failures = failures_json(grid.failures);
    std::optional<std::size_t> best;
    for (std::size_t idx = 0; idx < grid.values.size(); ++idx) {
      if (std::isnan(grid.values[idx])) continue;
      if (!best || grid.values[idx] > grid.values[*best]) best = idx;
    }
    if (best) {
      const std::size_t nk = grid.j_c_axis.size();
      o.summary["max"] = Json{{"omega_c", grid.omega_c_axis[*best / nk]},
                              {"j_c", grid.j_c_axis[*best % nk]},
                              {"negativity", grid.values[*best]}};
    }
    return o;
  };
  return plan;
}

// ---- scan -----------------------------------------------------------------

struct GammaAxis {
  std::string spacing;
  double min;
  double max;
  std::size_t points;
  std::vector<double> values;  // used when spacing == "list"
};

std::vector<double> gamma_points(const GammaAxis& g) {
  if (g.spacing == "list") return g.values;
  std::vector<double> out(g.points);
  for (std::size_t k = 0; k < g.points; ++k) {
    const double frac = static_cast<double>(k) / static_cast<double>(g.points - 1);
    out[k] = g.spacing == "log" ? std::pow(10.0, std::log10(g.min) +
                                                     frac * (std::log10(g.max) - std::log10(g.min)))
                                : g.min + frac * (g.max - g.min);
  }
  out.front() = g.min;
  out.back() = g.max;
  return out;
}

GammaAxis read_gamma_axis(Reader& cfg) {
  GammaAxis g{"log", 1e-4, 1.0, 201, {}};
  if (!cfg.has("gamma_c")) return g;
  Reader r = cfg.child("gamma_c");
  g.spacing = r.text_or("spacing", "log");
  if (g.spacing == "list") {
    const Json& v = r.raw("values");
    if (!v.is_array() || v.empty()) r.fail("'values' must be a non-empty array");
    for (const auto& x : v) {
      if (!x.is_number() || !(x.get<double>() > 0.0)) r.fail("'values' must be positive numbers");
      g.values.push_back(x.get<double>());
    }
  } else if (g.spacing == "log" || g.spacing == "linear") {
    g.min = r.number("min");
    g.max = r.number("max");
    g.points = r.count("points");
    if (!(g.min > 0.0) || !(g.max > g.min) || g.points < 2) {
      r.fail("need 0 < min < max and points >= 2");
    }
  } else {
    r.fail("spacing must be 'log', 'linear' or 'list'");
  }
  r.finish();
  return g;
}

Json gamma_axis_json(const GammaAxis& g) {
  if (g.spacing == "list") return Json{{"spacing", "list"}, {"values", g.values}};
  return Json{{"spacing", g.spacing}, {"min", g.min}, {"max", g.max}, {"points", g.points}};
}

struct CrossoverSpec {
  double reference;
  double lo;
  double hi;
  double tolerance;
};

Plan plan_scan(Reader& cfg) {
  const ModelParams tmpl =
      at("params", [&] { return template_from_json(cfg.raw("params"), {"gamma_c"}); });
  const GammaAxis axis = read_gamma_axis(cfg);
  std::optional<CrossoverSpec> cross;
  if (cfg.has("crossover")) {
    Reader r = cfg.child("crossover");
    const Json& b = r.raw("bracket");
    if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number()) {
      r.fail("'bracket' must be [lo, hi]");
    }
    cross = CrossoverSpec{r.number("reference"), b[0].get<double>(), b[1].get<double>(),
                          r.number_or("tolerance", 1e-3)};
    if (!(cross->lo > 0.0) || !(cross->hi > cross->lo) || !(cross->tolerance > 0.0)) {
      r.fail("need 0 < lo < hi and tolerance > 0");
    }
    r.finish();
  }
  cfg.finish();

  Plan plan;
  plan.config = Json{{"command", "scan"},
                     {"params", template_to_json(tmpl, {"gamma_c"})},
                     {"gamma_c", gamma_axis_json(axis)}};
  if (cross) {
    plan.config["crossover"] = Json{{"reference", cross->reference},
                                    {"bracket", {cross->lo, cross->hi}},
                                    {"tolerance", cross->tolerance}};
  }
  plan.compute = [tmpl, axis, cross](std::size_t jobs) {
    const auto points = gamma_points(axis);
    const auto curve = scan_gamma_c(tmpl, points, jobs);
    Outcome o;
    std::ostringstream csv;
    write_scan_csv(csv, curve);
    o.payload = csv.str();
    o.failures = failures_json(curve.failures);
    const ScanPoint* best = nullptr;
    for (const auto& pt : curve.points) {
      if (!std::isnan(pt.negativity) && (best == nullptr || pt.negativity > best->negativity)) {
        best = &pt;
      }
    }
    if (best != nullptr) {
      o.summary["max"] = Json{{"gamma_c", best->gamma_c}, {"negativity", best->negativity}};
    }
    if (cross) {
      o.summary["crossover_gamma_c"] =
          find_crossover(tmpl, {cross->lo, cross->hi}, cross->reference, cross->tolerance);
    }
    return o;
  };
  return plan;
}

// ---- dynamics -------------------------------------------------------------

struct TimeSpec {
  std::string spacing;
  double t_min;
  double t_max;
  double dt;
  std::size_t points;
};

Plan plan_dynamics(Reader& cfg) {
  const ModelParams p = at("params", [&] { return params_from_json(cfg.raw("params")); });
  const std::string initial = cfg.text_or("initial_state", "excited_a");
  if (initial != "excited_a" && initial != "maximally_mixed") {
    cfg.fail("initial_state must be 'excited_a' or 'maximally_mixed'");
  }
  const double cap = std::min(p.gamma, p.gamma_c) > 0.0 ? default_time_cap(p) : 1e4;
  TimeSpec ts{"log", 0.1, cap, 1.0, 301};
  if (cfg.has("times")) {
    Reader r = cfg.child("times");
    ts.spacing = r.text_or("spacing", "linear");
    if (ts.spacing == "linear") {
      ts.t_max = r.number("t_max");
      ts.dt = r.number_or("dt", 1.0);
    } else if (ts.spacing == "log") {
      ts.t_min = r.number("t_min");
      ts.t_max = r.number("t_max");
      ts.points = r.count("points");
    } else {
      r.fail("spacing must be 'linear' or 'log'");
    }
    r.finish();
  }
  cfg.finish();
  const std::vector<double> times =
      at("times", [&] {
        return ts.spacing == "linear" ? linear_times(ts.t_max, ts.dt)
                                      : log_times(ts.t_min, ts.t_max, ts.points);
      });

  Plan plan;
  Json times_json = ts.spacing == "linear"
                        ? Json{{"spacing", "linear"}, {"t_max", ts.t_max}, {"dt", ts.dt}}
                        : Json{{"spacing", "log"},
                               {"t_min", ts.t_min},
                               {"t_max", ts.t_max},
                               {"points", ts.points}};
  plan.config = Json{{"command", "dynamics"},
                     {"params", to_json(p)},
                     {"initial_state", initial},
                     {"times", std::move(times_json)}};
  plan.compute = [p, initial, times](std::size_t) {
    const DensityMatrix rho0 = initial == "excited_a" ? excited_a_initial_state()
                                                      : DensityMatrix::maximally_mixed(kSystemDim);
    const auto traj = fidelity_trajectory(p, rho0, times);
    Outcome o;
    std::ostringstream csv;
    write_trajectory_csv(csv, traj);
    o.payload = csv.str();
    const auto& last = traj.fidelity_rows.back();
    o.summary = Json{{"final_time", traj.times.back()},
                     {"final_argmax", last.argmax()},
                     {"final_fidelities", last.values},
                     {"final_negativity", negativity(partial_trace_c(traj.states.back()))}};
    return o;
  };
  return plan;
}

// ---- optimize -------------------------------------------------------------

Plan plan_optimize(Reader& cfg, std::optional<std::uint64_t> seed_override) {
  const Bounds bounds =
      cfg.has("bounds") ? at("bounds", [&] { return bounds_from_json(cfg.raw("bounds")); })
                        : Bounds{};
  const std::size_t starts = cfg.count_or("starts", 32);
  if (starts == 0) cfg.fail("starts must be at least 1");
  std::uint64_t seed = 1;
  if (cfg.has("seed")) {
    const Json& s = cfg.raw("seed");
    if (!s.is_number_unsigned()) cfg.fail("key 'seed' must be a non-negative integer");
    seed = s.get<std::uint64_t>();
  }
  if (seed_override) seed = *seed_override;
  OptimizerOptions options;
  if (cfg.has("nelder_mead")) {
    Reader r = cfg.child("nelder_mead");
    auto& nm = options.nelder_mead;
    nm.initial_step = r.number_or("initial_step", nm.initial_step);
    nm.f_tolerance = r.number_or("f_tolerance", nm.f_tolerance);
    nm.x_tolerance = r.number_or("x_tolerance", nm.x_tolerance);
    nm.max_evaluations = r.count_or("max_evaluations", nm.max_evaluations);
    if (!(nm.initial_step > 0.0) || nm.max_evaluations == 0) {
      r.fail("initial_step must be positive and max_evaluations at least 1");
    }
    r.finish();
  }
  options.penalty = cfg.number_or("penalty", options.penalty);
  cfg.finish();

  Plan plan;
  const auto& nm = options.nelder_mead;
  plan.config = Json{{"command", "optimize"},
                     {"bounds", to_json(bounds)},
                     {"starts", starts},
                     {"seed", seed},
                     {"nelder_mead", Json{{"initial_step", nm.initial_step},
                                          {"f_tolerance", nm.f_tolerance},
                                          {"x_tolerance", nm.x_tolerance},
                                          {"max_evaluations", nm.max_evaluations}}},
                     {"penalty", options.penalty}};
  plan.compute = [bounds, starts, seed, options](std::size_t jobs) {
    const auto r = maximize_entanglement(bounds, starts, seed, jobs, options);
    Outcome o;
    o.payload = dump(to_json(r));
    o.summary = Json{{"best_negativity", r.best_n}, {"best_params", to_json(r.best_params)}};
    return o;
  };
  return plan;
}

// ---- analytic2q -----------------------------------------------------------

Plan plan_analytic(Reader& cfg) {
  const double gamma = cfg.number_or("gamma", 1e-3);
  if (gamma < 0.0) cfg.fail("gamma must be non-negative");
  const Axis j = read_axis(cfg, "j", {0.0, 2.0, 201});
  cfg.finish();
  Plan plan;
  plan.config = Json{{"command", "analytic2q"}, {"gamma", gamma}, {"j", axis_json(j)}};
  plan.compute = [gamma, j](std::size_t) {
    const auto opt = optimal_two_qubit_coupling(gamma);
    Json curve = Json::array();
    for (double x : j.values()) {
      curve.push_back(Json{{"j", x}, {"negativity", two_qubit_analytic(x, gamma)}});
    }
    Outcome o;
    o.payload = dump(Json{{"gamma", gamma},
                          {"j_star", opt.j_star},
                          {"n_star", opt.n_star},
                          {"curve", std::move(curve)}});
    o.summary = Json{{"j_star", opt.j_star}, {"n_star", opt.n_star}};
    return o;
  };
  return plan;
}

// ---- driver ---------------------------------------------------------------

Json load_config(const Invocation& inv) {
  if (!inv.config_path.empty() && !inv.preset.empty()) {
    throw ConfigError("--config and --preset are mutually exclusive");
  }
  std::string text;
  std::string origin;
  if (!inv.preset.empty()) {
    const auto body = preset(inv.preset);
    if (!body) throw ConfigError("unknown preset '" + inv.preset + "'");
    text = std::string(*body);
    origin = "preset " + inv.preset;
  } else if (!inv.config_path.empty()) {
    std::ifstream in(inv.config_path);
    if (!in) throw ConfigError("cannot read config file '" + inv.config_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    origin = inv.config_path;
  } else {
    return Json::object();
  }
  Json cfg;
  try {
    cfg = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(origin + ": malformed JSON: " + e.what());
  }
  // A run manifest carries the normalized config under "config".
  if (cfg.is_object() && cfg.contains("tool_version") && cfg.contains("config")) {
    cfg = cfg["config"];
  }
  if (!cfg.is_object()) throw ConfigError(origin + ": top level must be a JSON object");
  return cfg;
}

Plan make_plan(const Invocation& inv, const Json& cfg) {
  Reader reader(cfg, "");
  if (reader.has("command")) {
    const std::string declared = reader.text("command");
    if (declared != inv.command) {
      throw ConfigError("config is for '" + declared + "' but the subcommand is '" + inv.command +
                        "'");
    }
  }
  if (inv.seed && inv.command != "optimize") {
    throw ConfigError("--seed only applies to optimize");
  }
  if (inv.jobs == 0) throw ConfigError("--jobs must be at least 1");
  if (inv.command == "steady") return plan_steady(reader);
  if (inv.command == "sweep") return plan_sweep(reader);
  if (inv.command == "scan") return plan_scan(reader);
  if (inv.command == "dynamics") return plan_dynamics(reader);
  if (inv.command == "optimize") return plan_optimize(reader, inv.seed);
  return plan_analytic(reader);
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << body;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("dal", sink);
  logger->set_pattern("[dal %l] %v");
  auto level = spdlog::level::warn;
  if (const char* env = std::getenv("DAL_LOG"); env != nullptr && *env != '\0') {
    level = spdlog::level::from_str(env);
    // from_str maps unknown names to off; keep warnings for typos.
    if (level == spdlog::level::off && std::string_view(env) != "off") level = spdlog::level::warn;
  }
  logger->set_level(level);
  return logger;
}

int execute(const Invocation& inv, std::ostream& out, spdlog::logger& log) {
  Plan plan;
  try {
    const Json cfg = load_config(inv);
    plan = make_plan(inv, cfg);
    if (inv.dry_run) {
      out << dump(plan.config);
      return kOk;
    }
    if (inv.out.empty()) throw ConfigError("--out is required (use '-' for standard output)");
  } catch (const ConfigError& e) {
    log.error("config error: {}", e.what());
    return kConfigError;
  }
  log.info("{}: config {}", inv.command, plan.config.dump());

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = plan.compute(inv.jobs);
  } catch (const Error& e) {
    log.error("computation failed: {}", e.what());
    return kComputationError;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& f : outcome.failures) {
    log.warn("point {} failed: {}", f["index"].get<std::size_t>(),
             f["message"].get<std::string>());
  }

  try {
    if (inv.out == "-") {
      out << outcome.payload;
      log.info("wrote result to standard output; no manifest");
      return kOk;
    }
    write_file(inv.out, outcome.payload);
    const Json manifest{{"tool", "dal"},
                        {"tool_version", kToolVersion},
                        {"command", inv.command},
                        {"config", plan.config},
                        {"jobs", inv.jobs},
                        {"output", inv.out},
                        {"wall_time_s", wall},
                        {"failures", outcome.failures},
                        {"summary", outcome.summary}};
    write_file(manifest_path(inv.out), dump(manifest));
    log.info("wrote {} and {} in {:.3f} s", inv.out, manifest_path(inv.out), wall);
  } catch (const std::runtime_error& e) {
    log.error("{}", e.what());
    return kComputationError;
  }
  return kOk;
}

}  // namespace

std::vector<std::string_view> preset_names() {
  std::vector<std::string_view> names;
  for (const auto& [name, body] : detail::presets()) names.push_back(name);
  return names;
}

std::optional<std::string_view> preset(std::string_view name) {
  for (const auto& [key, body] : detail::presets()) {
    if (key == name) return body;
  }
  return std::nullopt;
}

std::string manifest_path(const std::string& output) {
  std::filesystem::path p(output);
  p.replace_extension(".manifest.json");
  return p.string();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto logger = make_logger(err);

  CLI::App app{"Steady-state entanglement of two qubits coupled to a dissipative ancilla", "dal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Invocation inv;
  const std::array<std::pair<const char*, const char*>, 6> commands = {{
      {"steady", "steady state, negativity and eigenstate fidelities (JSON)"},
      {"sweep", "negativity over an (omega_c, j_c) grid (CSV)"},
      {"scan", "negativity versus the ancilla decay rate (CSV)"},
      {"dynamics", "fidelity trajectory from an initial state (CSV)"},
      {"optimize", "multi-start maximization of the negativity (JSON)"},
      {"analytic2q", "closed-form two-qubit negativity and its optimum (JSON)"},
  }};
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", inv.config_path, "JSON config or run manifest");
    sub->add_option("--preset", inv.preset, "built-in config name");
    sub->add_option("--out", inv.out, "result file ('-' for standard output)");
    sub->add_option("--jobs", inv.jobs, "worker threads for sweeps, scans and optimization");
    sub->add_option("--seed", inv.seed, "optimizer seed, overrides the config");
    sub->add_flag("--dry-run", inv.dry_run, "validate and print the normalized config, then stop");
    sub->callback([&inv, n = std::string(name)] { inv.command = n; });
  }
  CLI::App* list = app.add_subcommand("presets", "list built-in presets or print one");
  std::string shown;
  list->add_option("name", shown, "preset to print");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; anything else is an invocation error.
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  if (list->parsed()) {
    if (shown.empty()) {
      for (auto name : preset_names()) out << name << "\n";
      return kOk;
    }
    const auto body = preset(shown);
    if (!body) {
      err << "dal: unknown preset '" << shown << "'\n";
      return kConfigError;
    }
    out << *body;
    return kOk;
  }
  return execute(inv, out, *logger);
}

}  // namespace dal::cli
