#pragma once

// Brute-force reference computations that share no code with the library,
// plus random generators for property tests.

#include "bcb/pwa_map.hpp"
#include "bcb/star_polygon.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using P = Eigen::Vector2d;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline double cross(const P& a, const P& b) { return a.x() * b.y() - a.y() * b.x(); }

inline double shoelace(const std::vector<P>& vs) {
  double s = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const P& a = vs[i];
    const P& b = vs[(i + 1) % vs.size()];
    s += a.x() * b.y() - b.x() * a.y();
  }
  return 0.5 * s;
}

/// Even-odd ray casting towards +x.
inline bool inside(const std::vector<P>& poly, const P& q) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const P& a = poly[i];
    const P& b = poly[j];
    if ((a.y() > q.y()) != (b.y() > q.y())) {
      const double x = a.x() + (q.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (q.x() < x) in = !in;
    }
  }
  return in;
}

inline double seg_dist(const P& q, const P& a, const P& b) {
  const P d = b - a;
  const double l2 = d.squaredNorm();
  double t = l2 > 0 ? (q - a).dot(d) / l2 : 0.0;
  t = std::max(0.0, std::min(1.0, t));
  return (a + t * d - q).norm();
}

inline double boundary_dist(const std::vector<P>& poly, const P& q) {
  double best = INFINITY;
  for (std::size_t i = 0; i < poly.size(); ++i) best = std::min(best, seg_dist(q, poly[i], poly[(i + 1) % poly.size()]));
  return best;
}

/// Largest t >= 0 with t*u on the boundary, by intersecting the ray with
/// every edge.
inline double ray_radius(const std::vector<P>& poly, const P& u) {
  double best = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P& a = poly[i];
    const P& b = poly[(i + 1) % poly.size()];
    const P e = b - a;
    const double den = cross(u, e);
    if (den == 0.0) {
      if (cross(a, u) == 0.0 && a.dot(u) > 0) best = std::max({best, a.dot(u), b.dot(u)});
      continue;
    }
    const double t = cross(a, e) / den;
    const double s = cross(a, u) / den;
    if (t >= 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12) best = std::max(best, t);
  }
  return best;
}

/// Proper or touching intersection of closed segments, via parametric solve.
inline bool segments_meet(const P& a, const P& b, const P& c, const P& d, P* at = nullptr) {
  const P r = b - a, s = d - c;
  const double den = cross(r, s);
  if (den == 0.0) return false;
  const double t = cross(c - a, s) / den;
  const double u = cross(c - a, r) / den;
  if (t < 0 || t > 1 || u < 0 || u > 1) return false;
  if (at != nullptr) *at = a + t * r;
  return true;
}

/// inner is strictly inside outer with margin: dense inner boundary samples
/// lie inside at distance >= margin, and every outer vertex lies outside
/// inner at distance >= margin.
inline bool strictly_contains(const std::vector<P>& outer, const std::vector<P>& inner, double margin,
                              int per_edge = 64) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const P& a = inner[i];
    const P& b = inner[(i + 1) % inner.size()];
    for (int k = 0; k < per_edge; ++k) {
      const P q = a + (b - a) * (static_cast<double>(k) / per_edge);
      if (!inside(outer, q) || boundary_dist(outer, q) < margin) return false;
    }
  }
  for (const auto& v : outer)
    if (inside(inner, v) || boundary_dist(inner, v) < margin) return false;
  return true;
}

/// Hand-written 2x2 product.
inline P mul(double a, double b, double c, double d, const P& x) {
  return P(a * x.x() + b * x.y(), c * x.x() + d * x.y());
}

// ---- generators ----

using Rng = std::mt19937_64;

inline double uniform(Rng& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

/// Random polygon star-shaped about the origin with the origin strictly
/// inside: sorted angles with gaps below pi, radii in [rmin, rmax].
inline std::vector<P> star_polygon(Rng& g, int min_k = 3, int max_k = 12, double rmin = 0.3, double rmax = 2.0) {
  std::uniform_int_distribution<int> kd(min_k, max_k);
  for (;;) {
    const int k = kd(g);
    std::vector<double> th(static_cast<std::size_t>(k));
    for (auto& t : th) t = uniform(g, -std::numbers::pi, std::numbers::pi);
    std::sort(th.begin(), th.end());
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      const double gap = i + 1 < k ? th[i + 1] - th[i] : th[0] + 2 * std::numbers::pi - th[k - 1];
      if (!(gap > 1e-3 && gap < std::numbers::pi - 1e-3)) ok = false;
    }
    if (!ok) continue;
    std::vector<P> vs;
    for (double t : th) {
      const double r = uniform(g, rmin, rmax);
      vs.emplace_back(r * std::cos(t), r * std::sin(t));
    }
    return vs;
  }
}

/// Random continuous piecewise-linear planar map with |det| of both pieces
/// at least min_det. Shares the second column exactly.
inline bcb::PwaMap<double> pl_map(Rng& g, double min_det = 0.1, double scale = 1.5) {
  for (;;) {
    const double b = uniform(g, -scale, scale), d = uniform(g, -scale, scale);
    bcb::Mat l(2, 2), r(2, 2);
    l << uniform(g, -scale, scale), b, uniform(g, -scale, scale), d;
    r << uniform(g, -scale, scale), b, uniform(g, -scale, scale), d;
    if (std::abs(l.determinant()) < min_det || std::abs(r.determinant()) < min_det) continue;
    bcb::Vec off(2);
    off << 1.0, 0.0;
    return bcb::PwaMap<double>(l, r, off, 0.0);
  }
}

inline std::vector<P> scaled(const std::vector<P>& vs, double a) {
  std::vector<P> out;
  for (const auto& v : vs) out.push_back(a * v);
  return out;
}

inline std::vector<P> rotated(const std::vector<P>& vs, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  std::vector<P> out;
  for (const auto& v : vs) out.push_back(mul(c, -s, s, c, v));
  return out;
}

}  // namespace oracle
