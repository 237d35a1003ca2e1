#pragma once

// JSON and CSV forms of parameters, polygons, reports and sweep tables,
// with readers for everything that is written.

#include "bcb/lyapunov.hpp"
#include "bcb/pwa_map.hpp"
#include "bcb/stability.hpp"
#include "bcb/star_polygon.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcb {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Bad or missing input; `key()` names the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what) : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Shortest decimal string that reads back to the same double.
std::string format_double(double x);
double parse_double(const std::string& s, const std::string& key);

Json to_json(const BcnfParams& p);
/// Reads the keys that are present over `defaults`; unknown keys are errors.
BcnfParams params_from_json(const Json& j, BcnfParams defaults = {});

/// [[x, y], ...] counter-clockwise.
Json polygon_to_json(const StarPolygon& p);
StarPolygon polygon_from_json(const Json& j);
StarPolygon read_polygon_file(const std::string& path);

Json to_json(const StabilityReport& r);
Json to_json(const OrbitStats& s);
Json to_json(const LyapReport& r);
Json to_json(const SphereEstimate& s);
Json to_json(const TrappingEvidence& t);

/// `delta_R,smallest_m,status,wall_time_s`; an empty smallest_m when none
/// was found. Trailing `#` lines carry the schema tag.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool with_time = true);
std::vector<SweepRow> read_sweep_csv(std::istream& is);

/// `delta_R,mu,lambda_hat,lambda_bound,simple_bound,l_frac,r_frac,on_sigma,escaped`.
void write_lyap_csv(std::ostream& os, const std::vector<LyapRow>& rows);
std::vector<LyapRow> read_lyap_csv(std::istream& is);

struct OrbitDump {
  std::vector<Point> points;
  bool escaped = false;
  long escape_step = -1;  // index of the first point beyond the escape radius
};

/// `x1,x2` rows; an escape is recorded in a trailing `# escaped,<step>` row.
void write_orbit_csv(std::ostream& os, const OrbitDump& orbit);
OrbitDump read_orbit_csv(std::istream& is);

/// Schema tag of a CSV written by this module, or empty if none was found.
std::string read_csv_schema(std::istream& is);

}  // namespace bcb
