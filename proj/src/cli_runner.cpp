#include "bcb/cli.hpp"

#include "bcb/lyapunov.hpp"
#include "bcb/svg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace bcb {
namespace {

namespace fs = std::filesystem;

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::Stability, "stability"}, {Command::StabilitySweep, "stability-sweep"},
    {Command::Lyap, "lyap"},           {Command::LyapSweep, "lyap-sweep"},
    {Command::Orbit, "orbit"},         {Command::SphereCheck, "sphere-check"},
    {Command::Trapping, "trapping"},
};

StarPolygon load_omega(const std::string& source) {
  if (source == "diamond") return make_diamond();
  if (source.rfind("file:", 0) == 0) return read_polygon_file(source.substr(5));
  throw ConfigError("omega", "omega: expected 'diamond' or 'file:PATH', got '" + source + "'");
}

Vec to_vec(const std::vector<double>& v) { return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size())); }

Mat matrix_from_list(const std::vector<double>& v) {
  const auto d = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(v.size()))));
  if (d < 1 || static_cast<std::size_t>(d * d) != v.size())
    throw ConfigError("matrix", "matrix: expected d*d entries in row-major order");
  Mat m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = v[static_cast<std::size_t>(i * d + j)];
  return m;
}

double number(const Json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError(key, key + ": expected a number");
  return j.get<double>();
}

long integer(const Json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError(key, key + ": expected an integer");
  return j.get<long>();
}

bool boolean(const Json& j, const std::string& key) {
  if (!j.is_boolean()) throw ConfigError(key, key + ": expected true or false");
  return j.get<bool>();
}

std::string text(const Json& j, const std::string& key) {
  if (!j.is_string()) throw ConfigError(key, key + ": expected a string");
  return j.get<std::string>();
}

Vec vector_of(const Json& j, const std::string& key) {
  if (!j.is_array() || j.empty()) throw ConfigError(key, key + ": expected a non-empty array of numbers");
  std::vector<double> v;
  for (const auto& e : j) v.push_back(number(e, key));
  return to_vec(v);
}

Command command_of(const std::string& s) {
  if (auto c = parse_command(s)) return *c;
  throw ConfigError("command", "command: unknown command '" + s + "'");
}

Condition condition_of(const std::string& s) {
  if (auto c = parse_condition(s)) return *c;
  throw ConfigError("condition", "condition: expected 'ii' or 'iii', got '" + s + "'");
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json header_json(const RunConfig& cfg) {
  Json j;
  j["command"] = to_string(cfg.command);
  j["params"] = to_json(cfg.params);
  return j;
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

std::vector<Point> closed_outline(const StarPolygon& p) { return p.vertices(); }

int run_stability(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const StarPolygon omega = load_omega(cfg.omega);
  StabilityOptions opts;
  opts.m_max = cfg.m_max;
  opts.eta = cfg.eta;
  opts.condition = cfg.condition;
  const auto t0 = std::chrono::steady_clock::now();
  const StabilityReport rep = smallest_m(bcnf_map(cfg.params), omega, opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  Json j = header_json(cfg);
  j["omega"] = polygon_to_json(omega);
  j["m_max"] = cfg.m_max;
  merge(j, to_json(rep));
  if (!cfg.no_meta) j["wall_time_s"] = secs;
  write_file(out / "report.json", dump(j));

  if (cfg.svg) {
    PlotSpec spec{"Union of g^i(Omega), i < m, and g^m(Omega), m = " + std::to_string(rep.m), "x1", "x2", true};
    std::vector<Series> s{{"Omega", closed_outline(omega), "#999999", false, true},
                          {"union", closed_outline(rep.union_set), "#1f77b4", false, true},
                          {"g^m(Omega)", closed_outline(rep.image), "#d62728", false, true}};
    write_file(out / "stability.svg", render_svg(spec, s, !cfg.no_meta));
  }
  log << "stability: " << to_string(rep.status) << " m=" << rep.m << " condition=" << to_string(rep.condition)
      << " eta=" << format_double(rep.eta) << (rep.note.empty() ? "" : " (" + rep.note + ")") << '\n';
  return rep.status == StabilityStatus::Degenerate ? kExitDegenerate : kExitOk;
}

int run_stability_sweep(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const StarPolygon omega = load_omega(cfg.omega);
  StabilityOptions opts;
  opts.m_max = cfg.m_max;
  opts.eta = cfg.eta;
  opts.condition = cfg.condition;
  const auto rows = sweep_delta_R(cfg.params, *cfg.lo, *cfg.hi, *cfg.count, opts, omega, cfg.threads);
  std::ostringstream csv;
  write_sweep_csv(csv, rows, !cfg.no_meta);
  write_file(out / "results.csv", csv.str());

  int satisfied = 0;
  for (const auto& r : rows) satisfied += r.smallest_m.has_value();
  if (cfg.svg) {
    Series pts{"smallest m", {}, "#1f77b4", true};
    for (const auto& r : rows)
      if (r.smallest_m) pts.points.emplace_back(r.delta_R, *r.smallest_m);
    PlotSpec spec{"Smallest certifying m", "delta_R", "m"};
    write_file(out / "smallest_m.svg", render_svg(spec, {pts}, !cfg.no_meta));
  }
  log << "stability-sweep: " << satisfied << "/" << rows.size() << " satisfied\n";
  return kExitOk;
}

int run_lyap(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const auto map = bcnf_map(cfg.params);
  auto rep = lyapunov_estimate(map, cfg.x0, cfg.v0, cfg.steps(), cfg.burn_in);
  attach_bounds(rep, map);
  Json j = header_json(cfg);
  j["x0"] = vec_json(cfg.x0);
  j["v0"] = vec_json(cfg.v0);
  merge(j, to_json(rep));
  write_file(out / "report.json", dump(j));
  log << "lyap: lambda_hat=" << format_double(rep.lambda_hat) << " lambda_bound=" << format_double(rep.lambda_bound)
      << " simple_bound=" << format_double(rep.simple_bound) << (rep.stats.escaped ? " escaped" : "") << '\n';
  return kExitOk;
}

int run_lyap_sweep(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const auto rows =
      sweep_lyapunov(cfg.params, *cfg.lo, *cfg.hi, *cfg.count, cfg.params.mu, cfg.steps(), cfg.burn_in, cfg.threads);
  std::ostringstream csv;
  write_lyap_csv(csv, rows);
  write_file(out / "results.csv", csv.str());
  if (cfg.svg) {
    Series hat{"lambda_hat", {}, "#1f77b4"}, bound{"lambda_bound", {}, "#d62728"}, simple{"simple bound", {}, "#2ca02c"};
    for (const auto& r : rows) {
      hat.points.emplace_back(r.delta_R, r.lambda_hat);
      bound.points.emplace_back(r.delta_R, r.lambda_bound);
      simple.points.emplace_back(r.delta_R, r.simple_bound);
    }
    PlotSpec spec{"Lyapunov exponent and lower bounds, mu = " + format_double(cfg.params.mu), "delta_R", "exponent"};
    write_file(out / "lyapunov.svg", render_svg(spec, {hat, bound, simple}, !cfg.no_meta));
  }
  int ordered = 0;
  for (const auto& r : rows) ordered += r.lambda_hat >= r.lambda_bound;
  log << "lyap-sweep: " << rows.size() << " rows, lambda_hat >= lambda_bound in " << ordered << '\n';
  return kExitOk;
}

int run_orbit(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const OrbitDump orbit = emit_orbit(cfg.params, cfg.x0, cfg.steps());
  std::ostringstream csv;
  write_orbit_csv(csv, orbit);
  write_file(out / "orbit.csv", csv.str());
  if (cfg.svg) {
    PlotSpec spec{"Orbit of x0", "x1", "x2", true};
    write_file(out / "orbit.svg", render_svg(spec, {{"", orbit.points, "#000000", true}}, !cfg.no_meta));
  }
  log << "orbit: " << orbit.points.size() << " points" << (orbit.escaped ? " (escaped)" : "") << '\n';
  return kExitOk;
}

int run_sphere(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const Mat a = cfg.matrix ? *cfg.matrix : Mat(Mat::Identity(2, 2));
  const auto est = sphere_measure_mc(a, cfg.c, cfg.samples, cfg.seed, cfg.threads);
  Json j;
  j["command"] = to_string(cfg.command);
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) rows.push_back(vec_json(a.row(i).transpose()));
  j["matrix"] = std::move(rows);
  j["c"] = cfg.c;
  j["seed"] = cfg.seed;
  merge(j, to_json(est));
  write_file(out / "report.json", dump(j));
  log << "sphere-check: estimate=" << format_double(est.estimate) << " stderr=" << format_double(est.std_error)
      << " bound=" << format_double(est.bound) << '\n';
  return kExitOk;
}

int run_trapping(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const StarPolygon omega = load_omega(cfg.omega);
  const auto ev = trapping_evidence(bcnf_map(cfg.params), omega, cfg.epsilon, static_cast<int>(cfg.steps()), cfg.grid);
  Json j = header_json(cfg);
  j["epsilon"] = cfg.epsilon;
  j["n_max"] = cfg.steps();
  j["grid"] = cfg.grid;
  merge(j, to_json(ev));
  write_file(out / "report.json", dump(j));
  log << "trapping: " << (ev.trapped ? "trapped" : "not trapped") << " max_entry=" << ev.max_entry << " samples=" << ev.samples
      << '\n';
  return kExitOk;
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& e : kCommands)
    if (e.command == c) return e.name;
  return "unknown";
}

std::optional<Command> parse_command(const std::string& s) {
  for (const auto& e : kCommands)
    if (s == e.name) return e.command;
  return std::nullopt;
}

bool is_sweep(Command c) { return c == Command::StabilitySweep || c == Command::LyapSweep; }

long RunConfig::steps() const {
  if (n) return *n;
  switch (command) {
    case Command::Orbit: return 10000;
    case Command::Trapping: return 1000;
    default: return 1000000;
  }
}

void validate(const RunConfig& cfg) {
  const bool sweep = is_sweep(cfg.command);
  for (const auto& [present, key] : {std::pair{cfg.lo.has_value(), "lo"}, std::pair{cfg.hi.has_value(), "hi"},
                                      std::pair{cfg.count.has_value(), "count"}}) {
    if (sweep && !present) throw ConfigError(key, std::string(key) + ": required by " + to_string(cfg.command));
    if (!sweep && present) throw ConfigError(key, std::string(key) + ": only valid for sweep commands");
  }
  if (sweep) {
    if (cfg.command == Command::StabilitySweep && *cfg.count < 2) throw ConfigError("count", "count: must be at least 2");
    if (*cfg.count < 1) throw ConfigError("count", "count: must be at least 1");
    if (*cfg.count > 1 && !(*cfg.lo < *cfg.hi)) throw ConfigError("lo", "lo: must be less than hi");
  }
  for (const auto& [v, key] : {std::pair{cfg.params.tau_L, "tau_L"}, std::pair{cfg.params.delta_L, "delta_L"},
                                std::pair{cfg.params.tau_R, "tau_R"}, std::pair{cfg.params.delta_R, "delta_R"},
                                std::pair{cfg.params.mu, "mu"}})
    if (!std::isfinite(v)) throw ConfigError(key, std::string(key) + ": must be finite");
  if (cfg.m_max < 1) throw ConfigError("m_max", "m_max: must be at least 1");
  if (!std::isfinite(cfg.eta) || cfg.eta < 0.0) throw ConfigError("eta", "eta: must be non-negative");
  if (cfg.n && *cfg.n < 1) throw ConfigError("n", "n: must be at least 1");
  if (cfg.burn_in < 0) throw ConfigError("burn_in", "burn_in: must be non-negative");
  if (cfg.x0.size() != 2 || !cfg.x0.allFinite()) throw ConfigError("x0", "x0: expected two finite numbers");
  if (cfg.v0.size() != 2 || !cfg.v0.allFinite() || cfg.v0.isZero(0.0))
    throw ConfigError("v0", "v0: expected two finite numbers, not both zero");
  if (!(cfg.epsilon > 0.0)) throw ConfigError("epsilon", "epsilon: must be positive");
  if (cfg.samples < 1) throw ConfigError("samples", "samples: must be at least 1");
  if (!(cfg.c >= 0.0) || !std::isfinite(cfg.c)) throw ConfigError("c", "c: must be non-negative");
  if (cfg.grid < 2) throw ConfigError("grid", "grid: must be at least 2");
  if (cfg.matrix) {
    if (!cfg.matrix->allFinite()) throw ConfigError("matrix", "matrix: entries must be finite");
    if (cfg.matrix->determinant() == 0.0) throw ConfigError("matrix", "matrix: must be nonsingular");
  }
  if (cfg.command == Command::Trapping && cfg.steps() > std::numeric_limits<int>::max())
    throw ConfigError("n", "n: too large for trapping");
  if (cfg.omega != "diamond" && cfg.omega.rfind("file:", 0) != 0)
    throw ConfigError("omega", "omega: expected 'diamond' or 'file:PATH'");
}

RunConfig config_from_json(const Json& j, RunConfig cfg) {
  if (!j.is_object()) throw ConfigError("config", "config: expected a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "command") {
      cfg.command = command_of(text(v, key));
    } else if (key == "params") {
      cfg.params = params_from_json(v, cfg.params);
    } else if (key == "tau_L" || key == "delta_L" || key == "tau_R" || key == "delta_R" || key == "mu") {
      cfg.params = params_from_json(Json{{key, v}}, cfg.params);
    } else if (key == "matrix") {
      if (!v.is_array() || v.empty()) throw ConfigError(key, "matrix: expected an array of rows");
      std::vector<double> flat;
      for (const auto& row : v) {
        if (!row.is_array() || row.size() != v.size()) throw ConfigError(key, "matrix: expected a square array of rows");
        for (const auto& e : row) flat.push_back(number(e, key));
      }
      cfg.matrix = matrix_from_list(flat);
    } else if (key == "omega") {
      cfg.omega = text(v, key);
    } else if (key == "m_max") {
      cfg.m_max = static_cast<int>(integer(v, key));
    } else if (key == "eta") {
      cfg.eta = number(v, key);
    } else if (key == "condition") {
      cfg.condition = condition_of(text(v, key));
    } else if (key == "lo") {
      cfg.lo = number(v, key);
    } else if (key == "hi") {
      cfg.hi = number(v, key);
    } else if (key == "count") {
      cfg.count = static_cast<int>(integer(v, key));
    } else if (key == "n") {
      cfg.n = integer(v, key);
    } else if (key == "burn_in") {
      cfg.burn_in = integer(v, key);
    } else if (key == "x0") {
      cfg.x0 = vector_of(v, key);
    } else if (key == "v0") {
      cfg.v0 = vector_of(v, key);
    } else if (key == "epsilon") {
      cfg.epsilon = number(v, key);
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw ConfigError(key, "seed: expected a non-negative integer");
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "samples") {
      cfg.samples = integer(v, key);
    } else if (key == "c") {
      cfg.c = number(v, key);
    } else if (key == "grid") {
      cfg.grid = static_cast<int>(integer(v, key));
    } else if (key == "out") {
      cfg.out = text(v, key);
    } else if (key == "svg") {
      cfg.svg = boolean(v, key);
    } else if (key == "no_meta") {
      cfg.no_meta = boolean(v, key);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(integer(v, key));
    } else {
      throw ConfigError(key, key + ": unknown configuration key");
    }
  }
  return cfg;
}

std::vector<double> parse_list(const std::string& s, const std::string& key) {
  std::vector<double> out;
  std::string field;
  std::istringstream ss(s);
  while (std::getline(ss, field, ',')) {
    const auto b = field.find_first_not_of(" \t");
    const auto e = field.find_last_not_of(" \t");
    out.push_back(parse_double(b == std::string::npos ? "" : field.substr(b, e - b + 1), key));
  }
  if (out.empty()) throw ConfigError(key, key + ": expected a comma-separated list of numbers");
  return out;
}

OrbitDump emit_orbit(const BcnfParams& params, const Vec& x0, long n) {
  if (n < 1) throw std::invalid_argument("emit_orbit: n must be at least 1");
  const auto map = bcnf_map(params);
  OrbitDump out;
  out.points.reserve(static_cast<std::size_t>(std::min(n, 1L << 24)));
  Vec x = x0;
  for (long i = 0; i < n; ++i) {
    x = eval_map(map, x);
    out.points.emplace_back(x(0), x(1));
    if (!(x.squaredNorm() <= kEscapeRadius * kEscapeRadius)) {
      out.escaped = true;
      out.escape_step = i;
      break;
    }
  }
  return out;
}

int run(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  try {
    validate(cfg);
    const fs::path out(cfg.out);
    fs::create_directories(out);
    switch (cfg.command) {
      case Command::Stability: return run_stability(cfg, out, log);
      case Command::StabilitySweep: return run_stability_sweep(cfg, out, log);
      case Command::Lyap: return run_lyap(cfg, out, log);
      case Command::LyapSweep: return run_lyap_sweep(cfg, out, log);
      case Command::Orbit: return run_orbit(cfg, out, log);
      case Command::SphereCheck: return run_sphere(cfg, out, log);
      case Command::Trapping: return run_trapping(cfg, out, log);
    }
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const DegenerateImage& e) {
    err << "degenerate geometry: " << e.what() << '\n';
    return kExitDegenerate;
  }
  return kExitInvalidConfig;
}

int cli_main(int argc, const char* const* argv, std::ostream& log, std::ostream& err) {
  CLI::App app{"Stability certificates and Lyapunov exponents for piecewise-linear maps"};
  app.set_version_flag("--version", "bcb 1.0");

  std::optional<std::string> command, config, omega, condition, x0, v0, matrix, out;
  std::optional<double> tau_L, delta_L, tau_R, delta_R, mu, eta, lo, hi, epsilon, c;
  std::optional<int> m_max, count, grid;
  std::optional<long> n, burn_in, samples;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  bool svg = false, no_meta = false;

  std::string names;
  for (const auto& e : kCommands) names += std::string(names.empty() ? "" : "|") + e.name;
  app.add_option("command", command, names);
  app.add_option("--config", config, "JSON config file; flags override its values");
  app.add_option("--tau-L", tau_L, "Trace of A_L");
  app.add_option("--delta-L", delta_L, "Determinant of A_L");
  app.add_option("--tau-R", tau_R, "Trace of A_R");
  app.add_option("--delta-R", delta_R, "Determinant of A_R");
  app.add_option("--mu", mu, "Bifurcation parameter");
  app.add_option("--matrix", matrix, "sphere-check matrix, row-major, comma-separated");
  app.add_option("--omega", omega, "diamond or file:PATH (JSON array of [x, y])");
  app.add_option("--m-max", m_max, "Largest m tried");
  app.add_option("--eta", eta, "Containment margin; 0 selects 1e-9 times the diameter");
  app.add_option("--condition", condition, "ii or iii");
  app.add_option("--lo", lo, "Sweep start");
  app.add_option("--hi", hi, "Sweep end");
  app.add_option("--count", count, "Number of sweep points");
  app.add_option("--n", n, "Iterates (lyap, orbit) or n_max (trapping)");
  app.add_option("--burn-in", burn_in, "Discarded transient iterates");
  app.add_option("--x0", x0, "Initial point x1,x2");
  app.add_option("--v0", v0, "Initial tangent v1,v2");
  app.add_option("--epsilon", epsilon, "Trapping ball radius");
  app.add_option("--grid", grid, "Trapping lattice size per axis");
  app.add_option("--seed", seed, "Monte Carlo seed");
  app.add_option("--samples", samples, "Monte Carlo samples");
  app.add_option("--c", c, "sphere-check threshold");
  app.add_option("--out", out, "Output directory");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");
  app.add_flag("--svg", svg, "Also write SVG plots");
  app.add_flag("--no-meta", no_meta, "Omit timestamps and timings from outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    log << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    log << "bcb 1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  RunConfig cfg;
  try {
    if (config) {
      std::ifstream in(*config);
      if (!in) throw ConfigError("config", "config: cannot open '" + *config + "'");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw ConfigError("config", std::string("config: invalid JSON: ") + e.what());
      }
      cfg = config_from_json(j, cfg);
    } else if (!command) {
      throw ConfigError("command", "command: missing (one of " + names + ")");
    }
    if (command) cfg.command = command_of(*command);
    if (tau_L) cfg.params.tau_L = *tau_L;
    if (delta_L) cfg.params.delta_L = *delta_L;
    if (tau_R) cfg.params.tau_R = *tau_R;
    if (delta_R) cfg.params.delta_R = *delta_R;
    if (mu) cfg.params.mu = *mu;
    if (matrix) cfg.matrix = matrix_from_list(parse_list(*matrix, "matrix"));
    if (omega) cfg.omega = *omega;
    if (m_max) cfg.m_max = *m_max;
    if (eta) cfg.eta = *eta;
    if (condition) cfg.condition = condition_of(*condition);
    if (lo) cfg.lo = lo;
    if (hi) cfg.hi = hi;
    if (count) cfg.count = count;
    if (n) cfg.n = n;
    if (burn_in) cfg.burn_in = *burn_in;
    if (x0) cfg.x0 = to_vec(parse_list(*x0, "x0"));
    if (v0) cfg.v0 = to_vec(parse_list(*v0, "v0"));
    if (epsilon) cfg.epsilon = *epsilon;
    if (grid) cfg.grid = *grid;
    if (seed) cfg.seed = *seed;
    if (samples) cfg.samples = *samples;
    if (c) cfg.c = *c;
    if (out) cfg.out = *out;
    if (threads) cfg.threads = *threads;
    if (svg) cfg.svg = true;
    if (no_meta) cfg.no_meta = true;
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  return run(cfg, log, err);
}

}  // namespace bcb
