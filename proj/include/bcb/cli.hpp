#pragma once

// Command-line front end: configuration, dispatch and file output.

#include "bcb/io.hpp"
#include "bcb/pwa_map.hpp"
#include "bcb/stability.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bcb {

enum class Command { Stability, StabilitySweep, Lyap, LyapSweep, Orbit, SphereCheck, Trapping };

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& s);
bool is_sweep(Command c);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitDegenerate = 3;

struct RunConfig {
  Command command = Command::Stability;
  BcnfParams params{2.0, 1.4, -0.8, -1.4, 0.0};
  std::optional<Mat> matrix;  // sphere-check; identity when absent
  std::string omega = "diamond";  // "diamond" or "file:PATH"
  int m_max = 200;
  double eta = 0.0;  // <= 0 selects the relative default
  Condition condition = Condition::UnionInterior;
  std::optional<double> lo;
  std::optional<double> hi;
  std::optional<int> count;
  std::optional<long> n;  // per-command default when absent
  long burn_in = 100;
  Vec x0 = Vec::Zero(2);
  Vec v0 = Vec::Unit(2, 0);
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  long samples = 100000;
  double c = 1.0;
  int grid = 21;
  std::string out = ".";
  bool svg = false;
  bool no_meta = false;
  unsigned threads = 0;

  /// n, or the command's default (10^6 for lyap, 10^4 for orbit, 1000 for trapping).
  long steps() const;
};

/// Throws ConfigError naming the first offending key.
void validate(const RunConfig& cfg);

/// Reads the keys present in `j` over `base`. Parameters may be given flat
/// or under "params". Unknown keys are errors.
RunConfig config_from_json(const Json& j, RunConfig base = {});

/// "a,b,c" into a vector; `key` names the field in errors.
std::vector<double> parse_list(const std::string& s, const std::string& key);

/// The first n points f(x0), ..., f^n(x0); stops after the first point beyond
/// the escape radius and records it.
OrbitDump emit_orbit(const BcnfParams& params, const Vec& x0, long n);

/// Runs the configured experiment and writes its files into cfg.out.
/// Returns the process exit status.
int run(const RunConfig& cfg, std::ostream& log, std::ostream& err);

/// Parses arguments (flags override --config values), then calls run().
int cli_main(int argc, const char* const* argv, std::ostream& log, std::ostream& err);

}  // namespace bcb
