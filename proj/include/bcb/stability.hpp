#pragma once

// Certifies asymptotic stability of the origin for a planar piecewise-linear
// map by iterating a star-shaped set Omega and testing
//   (ii)  g^m(Omega) inside int(Omega), or
//   (iii) g^m(Omega) inside int(union_{i<m} g^i(Omega)).
// Either containment for some m >= 1 is equivalent to asymptotic stability.

#include "bcb/pwa_map.hpp"
#include "bcb/star_polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bcb {

enum class Condition {
  OmegaInterior,  // (ii)
  UnionInterior,  // (iii)
};

enum class StabilityStatus { Satisfied, Inconclusive, Degenerate };

std::string to_string(Condition c);
std::string to_string(StabilityStatus s);
std::optional<Condition> parse_condition(const std::string& s);

struct StabilityOptions {
  int m_max = 200;
  /// Absolute containment margin; when <= 0 the margin is eta_rel * diameter
  /// of the containing set, recomputed at every step.
  double eta = 0.0;
  double eta_rel = 1e-9;
  Condition condition = Condition::UnionInterior;
  double simplify_rel_tol = kSimplifyRelTol;
  std::size_t max_vertices = 100000;
};

struct StepRecord {
  int m = 0;
  std::size_t image_vertices = 0;  // g^m(Omega)
  std::size_t union_vertices = 0;  // union_{i<m} g^i(Omega)
};

struct StabilityReport {
  StabilityStatus status = StabilityStatus::Inconclusive;
  /// Certifying m when Satisfied; m_max when Inconclusive; the failing step
  /// when Degenerate.
  int m = 0;
  Condition condition = Condition::UnionInterior;
  std::vector<StepRecord> per_step;
  double eta = 0.0;
  StarPolygon union_set;  // union_{i<m} g^i(Omega) at the last step
  StarPolygon image;      // g^m(Omega) at the last step
  std::string note;

  bool satisfied() const { return status == StabilityStatus::Satisfied; }
};

/// Smallest m <= m_max for which the chosen condition holds. Only the
/// linear part of `map` is used.
StabilityReport smallest_m(const PwaMap<double>& map, const StarPolygon& omega, const StabilityOptions& opts = {});

struct SweepRow {
  double delta_R = 0.0;
  std::optional<int> smallest_m;
  StabilityStatus status = StabilityStatus::Inconclusive;
  double wall_time = 0.0;
};

/// `count` evenly spaced values from lo to hi inclusive (count = 1 gives lo).
std::vector<double> linspace(double lo, double hi, int count);

/// smallest_m (condition iii unless overridden) at each delta_R with mu = 0.
std::vector<SweepRow> sweep_delta_R(const BcnfParams& base, double lo, double hi, int count,
                                    const StabilityOptions& opts = {}, const StarPolygon& omega = make_diamond(),
                                    unsigned threads = 0);

struct TrappingEvidence {
  bool trapped = false;
  int max_entry = 0;  // largest N after which a sampled orbit stays in B_eps(0)
  int samples = 0;
  int failures = 0;
};

/// Numerical evidence only: samples a grid x grid lattice over the bounding
/// box of Omega, keeps points inside Omega, and checks each orbit is in
/// B_eps(0) from some N <= n_max through step n_max.
TrappingEvidence trapping_evidence(const PwaMap<double>& map, const StarPolygon& omega, double epsilon, int n_max,
                                   int grid);

}  // namespace bcb
