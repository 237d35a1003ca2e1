#include "bcb/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace bcb {
namespace {

constexpr const char* kSweepHeader = "delta_R,smallest_m,status,wall_time_s";
constexpr const char* kLyapHeader = "delta_R,mu,lambda_hat,lambda_bound,simple_bound,l_frac,r_frac,on_sigma,escaped";
constexpr const char* kOrbitHeader = "x1,x2";

std::string schema_tag(const char* kind) { return std::string("bcb.") + kind + "/" + std::to_string(kSchemaVersion); }

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Reads the header line and the data lines; `#` lines are skipped.
std::vector<std::vector<std::string>> read_table(std::istream& is, const char* header, std::size_t columns,
                                                 const std::string& what) {
  std::string line;
  if (!std::getline(is, line) || line != header)
    throw ConfigError(what, what + ": expected header '" + header + "'");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_csv(line);
    if (fields.size() != columns)
      throw ConfigError(what, what + ": expected " + std::to_string(columns) + " fields in '" + line + "'");
    rows.push_back(std::move(fields));
  }
  return rows;
}

long parse_long(const std::string& s, const std::string& key) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError(key, key + ": not an integer: '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s, const std::string& key) {
  if (s == "1" || s == "true") return true;
  if (s == "0" || s == "false") return false;
  throw ConfigError(key, key + ": not a boolean: '" + s + "'");
}

StabilityStatus parse_status(const std::string& s) {
  for (auto st : {StabilityStatus::Satisfied, StabilityStatus::Inconclusive, StabilityStatus::Degenerate})
    if (to_string(st) == s) return st;
  throw ConfigError("status", "status: unknown value '" + s + "'");
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

double parse_double(const std::string& s, const std::string& key) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ConfigError(key, key + ": not a number: '" + s + "'");
  return v;
}

Json to_json(const BcnfParams& p) {
  return Json{{"tau_L", p.tau_L}, {"delta_L", p.delta_L}, {"tau_R", p.tau_R}, {"delta_R", p.delta_R}, {"mu", p.mu}};
}

BcnfParams params_from_json(const Json& j, BcnfParams p) {
  if (!j.is_object()) throw ConfigError("params", "params: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    double* slot = key == "tau_L"     ? &p.tau_L
                   : key == "delta_L" ? &p.delta_L
                   : key == "tau_R"   ? &p.tau_R
                   : key == "delta_R" ? &p.delta_R
                   : key == "mu"      ? &p.mu
                                      : nullptr;
    if (slot == nullptr) throw ConfigError(key, key + ": unknown parameter");
    if (!value.is_number()) throw ConfigError(key, key + ": expected a number");
    *slot = value.get<double>();
  }
  return p;
}

Json polygon_to_json(const StarPolygon& p) {
  Json arr = Json::array();
  for (const auto& v : p.vertices()) arr.push_back(Json::array({v.x(), v.y()}));
  return arr;
}

StarPolygon polygon_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("omega", "omega: expected an array of [x, y] pairs");
  std::vector<Point> vs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ConfigError("omega", "omega: every vertex must be an [x, y] pair of numbers");
    vs.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  try {
    return StarPolygon::from_vertices(vs);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("omega", std::string("omega: ") + e.what());
  }
}

StarPolygon read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("omega", "omega: cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("omega", "omega: invalid JSON in '" + path + "': " + e.what());
  }
  return polygon_from_json(j);
}

Json to_json(const StabilityReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.per_step) steps.push_back(Json::array({s.m, s.image_vertices, s.union_vertices}));
  Json j;
  j["schema"] = schema_tag("stability");
  j["status"] = to_string(r.status);
  j["smallest_m"] = r.satisfied() ? Json(r.m) : Json(nullptr);
  j["m"] = r.m;
  j["condition"] = to_string(r.condition);
  j["eta"] = r.eta;
  j["note"] = r.note;
  j["per_step"] = std::move(steps);
  j["union_set"] = polygon_to_json(r.union_set);
  j["image"] = polygon_to_json(r.image);
  return j;
}

Json to_json(const OrbitStats& s) {
  return Json{{"n", s.n},
              {"burn_in", s.burn_in},
              {"l_n", s.l_n},
              {"r_n", s.r_n},
              {"on_sigma", s.on_sigma},
              {"log_sum", number_or_null(s.log_sum)},
              {"escaped", s.escaped},
              {"l_frac", s.l_frac()},
              {"r_frac", s.r_frac()},
              {"l_tail_min", s.l_tail_min},
              {"r_tail_min", s.r_tail_min}};
}

Json to_json(const LyapReport& r) {
  return Json{{"schema", schema_tag("lyap")},
              {"lambda_hat", number_or_null(r.lambda_hat)},
              {"lambda_bound", number_or_null(r.lambda_bound)},
              {"lambda_bound_tail", number_or_null(r.lambda_bound_tail)},
              {"simple_bound", number_or_null(r.simple_bound)},
              {"stats", to_json(r.stats)}};
}

Json to_json(const SphereEstimate& s) {
  return Json{{"schema", schema_tag("sphere")},
              {"estimate", s.estimate},
              {"std_error", s.std_error},
              {"bound", s.bound},
              {"samples", s.samples},
              {"within_bound", s.estimate <= s.bound + 3.0 * s.std_error}};
}

Json to_json(const TrappingEvidence& t) {
  return Json{{"schema", schema_tag("trapping")},
              {"trapped", t.trapped},
              {"max_entry", t.max_entry},
              {"samples", t.samples},
              {"failures", t.failures}};
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool with_time) {
  os << kSweepHeader << '\n';
  for (const auto& r : rows) {
    os << format_double(r.delta_R) << ',';
    if (r.smallest_m) os << *r.smallest_m;
    os << ',' << to_string(r.status) << ',' << format_double(with_time ? r.wall_time : 0.0) << '\n';
  }
  os << "# schema," << schema_tag("sweep") << '\n';
}

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  std::vector<SweepRow> out;
  for (const auto& f : read_table(is, kSweepHeader, 4, "sweep csv")) {
    SweepRow r;
    r.delta_R = parse_double(f[0], "delta_R");
    if (!f[1].empty()) r.smallest_m = static_cast<int>(parse_long(f[1], "smallest_m"));
    r.status = parse_status(f[2]);
    r.wall_time = parse_double(f[3], "wall_time_s");
    out.push_back(r);
  }
  return out;
}

void write_lyap_csv(std::ostream& os, const std::vector<LyapRow>& rows) {
  os << kLyapHeader << '\n';
  for (const auto& r : rows) {
    os << format_double(r.delta_R) << ',' << format_double(r.mu) << ',' << format_double(r.lambda_hat) << ','
       << format_double(r.lambda_bound) << ',' << format_double(r.simple_bound) << ',' << format_double(r.l_frac)
       << ',' << format_double(r.r_frac) << ',' << r.on_sigma << ',' << (r.escaped ? 1 : 0) << '\n';
  }
  os << "# schema," << schema_tag("lyap-sweep") << '\n';
}

std::vector<LyapRow> read_lyap_csv(std::istream& is) {
  std::vector<LyapRow> out;
  for (const auto& f : read_table(is, kLyapHeader, 9, "lyap csv")) {
    LyapRow r;
    r.delta_R = parse_double(f[0], "delta_R");
    r.mu = parse_double(f[1], "mu");
    r.lambda_hat = parse_double(f[2], "lambda_hat");
    r.lambda_bound = parse_double(f[3], "lambda_bound");
    r.simple_bound = parse_double(f[4], "simple_bound");
    r.l_frac = parse_double(f[5], "l_frac");
    r.r_frac = parse_double(f[6], "r_frac");
    r.on_sigma = parse_long(f[7], "on_sigma");
    r.escaped = parse_bool(f[8], "escaped");
    out.push_back(r);
  }
  return out;
}

void write_orbit_csv(std::ostream& os, const OrbitDump& orbit) {
  os << kOrbitHeader << '\n';
  for (const auto& p : orbit.points) os << format_double(p.x()) << ',' << format_double(p.y()) << '\n';
  if (orbit.escaped) os << "# escaped," << orbit.escape_step << '\n';
  os << "# schema," << schema_tag("orbit") << '\n';
}

OrbitDump read_orbit_csv(std::istream& is) {
  OrbitDump out;
  std::string line;
  if (!std::getline(is, line) || line != kOrbitHeader)
    throw ConfigError("orbit csv", std::string("orbit csv: expected header '") + kOrbitHeader + "'");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (line.front() == '#') {
      if (f.size() == 2 && f[0] == "# escaped") {
        out.escaped = true;
        out.escape_step = parse_long(f[1], "escaped");
      }
      continue;
    }
    if (f.size() != 2) throw ConfigError("orbit csv", "orbit csv: expected 2 fields in '" + line + "'");
    out.points.emplace_back(parse_double(f[0], "x1"), parse_double(f[1], "x2"));
  }
  return out;
}

std::string read_csv_schema(std::istream& is) {
  std::string line;
  std::string tag;
  while (std::getline(is, line)) {
    const auto f = split_csv(line);
    if (f.size() == 2 && f[0] == "# schema") tag = f[1];
  }
  return tag;
}

}  // namespace bcb
