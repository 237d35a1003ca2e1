#pragma once

// Lyapunov exponents of the direction-dependent tangent cocycle, side counts
// along orbits, and the determinant lower bound on the maximal exponent.

#include "bcb/pwa_map.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bcb {

/// Orbit norm beyond which an orbit counts as escaped.
inline constexpr double kEscapeRadius = 1e12;

struct OrbitStats {
  long n = 0;  // post-burn-in steps actually taken (fewer than requested on escape)
  long burn_in = 0;
  long l_n = 0;  // x1 < 0
  long r_n = 0;  // x1 > 0
  long on_sigma = 0;
  double log_sum = 0.0;
  bool escaped = false;
  /// Minimum of l_k / k and r_k / k over the last 10% of prefixes k.
  double l_tail_min = 0.0;
  double r_tail_min = 0.0;

  double l_frac() const { return n > 0 ? static_cast<double>(l_n) / static_cast<double>(n) : 0.0; }
  double r_frac() const { return n > 0 ? static_cast<double>(r_n) / static_cast<double>(n) : 0.0; }
};

struct BoundInputs {
  double a_L = 0.0;
  double a_R = 0.0;
  double ell = 0.0;
  double r = 0.0;
  int d = 1;
};

struct LyapReport {
  double lambda_hat = 0.0;
  double lambda_bound = -std::numeric_limits<double>::infinity();
  /// Bound from the tail-minimum side fractions instead of the final ratios.
  double lambda_bound_tail = -std::numeric_limits<double>::infinity();
  double simple_bound = -std::numeric_limits<double>::infinity();
  OrbitStats stats;
};

namespace detail {

/// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

/// Tracks side counts and the running minimum of the prefix ratios over the
/// last 10% of prefixes.
class SideCounter {
 public:
  explicit SideCounter(long n) : tail_start_(n - n / 10) {}

  template <typename Derived>
  void record(const Eigen::MatrixBase<Derived>& x) {
    switch (side_of(x)) {
      case Side::Left: ++l_; break;
      case Side::Right: ++r_; break;
      case Side::Switching: ++sigma_; break;
    }
    ++k_;
    if (k_ >= tail_start_) {
      const double kd = static_cast<double>(k_);
      l_min_ = std::min(l_min_, static_cast<double>(l_) / kd);
      r_min_ = std::min(r_min_, static_cast<double>(r_) / kd);
    }
  }

  void fill(OrbitStats& s) const {
    s.n = k_;
    s.l_n = l_;
    s.r_n = r_;
    s.on_sigma = sigma_;
    s.l_tail_min = k_ >= tail_start_ ? l_min_ : s.l_frac();
    s.r_tail_min = k_ >= tail_start_ ? r_min_ : s.r_frac();
  }

 private:
  long tail_start_;
  long k_ = 0, l_ = 0, r_ = 0, sigma_ = 0;
  double l_min_ = std::numeric_limits<double>::infinity();
  double r_min_ = std::numeric_limits<double>::infinity();
};

template <typename Scalar>
bool escaped(const Vector<Scalar>& x) {
  return !(static_cast<double>(x.squaredNorm()) <= kEscapeRadius * kEscapeRadius);
}

}  // namespace detail

/// Renormalized estimate (1/n) sum ln ||C(x_i, v_i) v_i|| with unit v_i.
///
/// Burn-in steps advance the skew map and renormalize v without recording
/// growth. Side counts are taken at the same n points where the tangent
/// matrix is evaluated. If a step annihilates the tangent, lambda_hat is
/// -infinity and only the orbit continues. Bounds are left unset.
template <typename Scalar>
LyapReport lyapunov_estimate(const PwaMap<Scalar>& map, const Vector<Scalar>& x0, const Vector<Scalar>& v0, long n,
                             long burn_in) {
  using std::log;
  if (n < 1) throw std::invalid_argument("lyapunov_estimate: n must be at least 1");
  if (burn_in < 0) throw std::invalid_argument("lyapunov_estimate: burn_in must be non-negative");
  detail::check_dim(map, x0, "lyapunov_estimate(x0)");
  detail::check_dim(map, v0, "lyapunov_estimate(v0)");
  const Scalar v0_norm = v0.norm();
  if (!(v0_norm > Scalar(0))) throw std::invalid_argument("lyapunov_estimate: v0 must be non-zero");

  LyapReport rep;
  rep.stats.burn_in = burn_in;
  Vector<Scalar> x = x0;
  Vector<Scalar> v = v0 / v0_norm;
  bool lost = false;

  for (long i = 0; i < burn_in && !rep.stats.escaped && !lost; ++i) {
    const auto& c = tangent_matrix(map, x, v);
    Vector<Scalar> w = c * v;
    x = eval_map(map, x);
    const Scalar s = w.norm();
    if (s > Scalar(0)) {
      v = w / s;
    } else {
      lost = true;
    }
    rep.stats.escaped = detail::escaped(x);
  }

  detail::SideCounter counter(n);
  detail::CompensatedSum sum;
  for (long i = 0; i < n && !rep.stats.escaped; ++i) {
    counter.record(x);
    if (!lost) {
      const auto& c = tangent_matrix(map, x, v);
      Vector<Scalar> w = c * v;
      const Scalar s = w.norm();
      if (s > Scalar(0)) {
        sum.add(static_cast<double>(log(s)));
        v = w / s;
      } else {
        lost = true;
      }
    }
    x = eval_map(map, x);
    rep.stats.escaped = detail::escaped(x);
  }
  counter.fill(rep.stats);
  rep.stats.log_sum = lost ? -std::numeric_limits<double>::infinity() : sum.value();
  rep.lambda_hat = lost ? -std::numeric_limits<double>::infinity()
                        : rep.stats.log_sum / static_cast<double>(rep.stats.n);
  return rep;
}

/// Strict side counts of f^i(x0) over n points after burn_in steps.
template <typename Scalar>
OrbitStats orbit_side_counts(const PwaMap<Scalar>& map, const Vector<Scalar>& x0, long n, long burn_in) {
  if (n < 1) throw std::invalid_argument("orbit_side_counts: n must be at least 1");
  if (burn_in < 0) throw std::invalid_argument("orbit_side_counts: burn_in must be non-negative");
  detail::check_dim(map, x0, "orbit_side_counts");
  OrbitStats stats;
  stats.burn_in = burn_in;
  Vector<Scalar> x = x0;
  for (long i = 0; i < burn_in && !stats.escaped; ++i) {
    x = eval_map(map, x);
    stats.escaped = detail::escaped(x);
  }
  detail::SideCounter counter(n);
  for (long i = 0; i < n && !stats.escaped; ++i) {
    counter.record(x);
    x = eval_map(map, x);
    stats.escaped = detail::escaped(x);
  }
  counter.fill(stats);
  return stats;
}

struct DetMins {
  double a_L = 0.0;
  double a_R = 0.0;
};

/// |det A_L|, |det A_R|: the Jacobian determinant minima of affine pieces.
template <typename Scalar>
DetMins det_mins(const PwaMap<Scalar>& map) {
  using std::abs;
  return {static_cast<double>(abs(map.left().determinant())), static_cast<double>(abs(map.right().determinant()))};
}

/// (1/d) ln(2^(ell + r - 1) a) with a = min(a_L^ell a_R^(1-ell), a_L^(1-r) a_R^r);
/// -infinity when a = 0.
double lambda_bound(const BoundInputs& in);

/// (1/d) ln min(a_L, a_R); -infinity when the minimum is 0.
double simple_bound(double a_L, double a_R, int d);

/// Fills the three bounds of `rep` from its side counts and the determinants of `map`.
void attach_bounds(LyapReport& rep, const PwaMap<double>& map);

struct SphereEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  double bound = 0.0;  // c^d / |det A|
  long samples = 0;
};

/// Fraction of the unit sphere with ||A v|| <= c, from `samples` normalized
/// Gaussian directions. Samples are drawn in fixed-size chunks, each from its
/// own stream seeded by (seed, chunk index), so the result does not depend on
/// the number of worker threads.
SphereEstimate sphere_measure_mc(const Mat& a, double c, long samples, std::uint64_t seed, unsigned threads = 0);

struct LyapRow {
  double delta_R = 0.0;
  double mu = 0.0;
  double lambda_hat = 0.0;
  double lambda_bound = 0.0;
  double simple_bound = 0.0;
  double l_frac = 0.0;
  double r_frac = 0.0;
  long on_sigma = 0;
  bool escaped = false;
};

/// One Lyapunov estimate per delta_R from x0 = 0, v0 = (1, 0).
std::vector<LyapRow> sweep_lyapunov(const BcnfParams& base, double lo, double hi, int count, double mu, long n,
                                    long burn_in, unsigned threads = 0);

}  // namespace bcb
