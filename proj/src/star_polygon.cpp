#include "bcb/star_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace bcb {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

bool is_zero(const Point& p) { return p.x() == 0.0 && p.y() == 0.0; }

double angle_of(const Point& p) { return std::atan2(p.y(), p.x()); }

// Counter-clockwise angular distance from a to b, in [0, 2pi).
double ccw_gap(double from, double to) {
  double d = to - from;
  while (d < 0.0) d += kTwoPi;
  while (d >= kTwoPi) d -= kTwoPi;
  return d;
}

RadialBreak make_break(const Point& p) {
  const double r = p.norm();
  const Point dir = p / r;
  return RadialBreak{dir, angle_of(dir), r, r};
}

// Radius along unit direction `u` of the edge leaving break a towards b.
double sector_radius(const RadialBreak& a, const RadialBreak& b, const Point& u) {
  if (a.r_out == 0.0 || b.r_in == 0.0) return 0.0;
  const Point p = a.out();
  const Point q = b.in();
  const double den = cross(u, q - p);
  const double num = cross(p, q);
  if (!(den > 0.0) || !(num > 0.0)) {
    // degenerate sliver: u sits numerically on an end of the edge
    return std::abs(cross(u, a.dir)) <= std::abs(cross(u, b.dir)) ? a.r_out : b.r_in;
  }
  return num / den;
}

// Index k of the sector (break k, break k+1) that contains `angle`, which
// must not equal any break angle.
std::size_t locate_sector(const std::vector<RadialBreak>& bs, double angle) {
  auto it = std::upper_bound(bs.begin(), bs.end(), angle,
                             [](double a, const RadialBreak& b) { return a < b.angle; });
  if (it == bs.begin()) return bs.size() - 1;
  return static_cast<std::size_t>(it - bs.begin()) - 1;
}

// One operand of a union seen at a direction: its own break, or the radius
// of the edge crossing that direction.
struct Probe {
  double r_in;
  double r_out;
  bool own = false;
};

Probe probe(const std::vector<RadialBreak>& bs, const RadialBreak* own, const Point& dir, double angle) {
  if (own != nullptr) return {own->r_in, own->r_out, true};
  const std::size_t k = locate_sector(bs, angle);
  const double r = sector_radius(bs[k], bs[(k + 1) % bs.size()], dir);
  return {r, r, false};
}

// Intersection of the lines through (a0, a1) and (b0, b1).
bool line_intersection(const Point& a0, const Point& a1, const Point& b0, const Point& b1, Point& out) {
  const Point r = a1 - a0;
  const Point s = b1 - b0;
  const double den = cross(r, s);
  if (den == 0.0) return false;
  const double t = cross(b0 - a0, s) / den;
  out = a0 + t * r;
  return std::isfinite(out.x()) && std::isfinite(out.y());
}

// Rotates a cyclic CCW break list so it starts at the smallest angle, drops
// breaks lying inside a gap, and merges breaks with equal angles.
std::vector<RadialBreak> normalize(std::vector<RadialBreak> bs) {
  std::erase_if(bs, [](const RadialBreak& b) { return b.r_in == 0.0 && b.r_out == 0.0; });
  if (bs.empty()) return bs;
  auto first = std::min_element(bs.begin(), bs.end(),
                                [](const RadialBreak& a, const RadialBreak& b) { return a.angle < b.angle; });
  std::rotate(bs.begin(), first, bs.end());
  std::vector<RadialBreak> out;
  out.reserve(bs.size());
  for (const auto& b : bs) {
    if (!out.empty() && b.angle <= out.back().angle) {
      out.back().r_out = b.r_out;
      continue;
    }
    out.push_back(b);
  }
  std::erase_if(out, [](const RadialBreak& b) { return b.r_in == 0.0 && b.r_out == 0.0; });
  return out;
}

bool same_direction(const Point& p, const Point& q) {
  return p.dot(q) > 0.0 && std::abs(cross(p, q)) <= 1e-14 * p.norm() * q.norm();
}

bool sectors_consistent(const std::vector<RadialBreak>& bs) {
  for (std::size_t k = 0; k < bs.size(); ++k) {
    const auto& a = bs[k];
    const auto& b = bs[(k + 1) % bs.size()];
    if (!std::isfinite(a.r_in) || !std::isfinite(a.r_out) || a.r_in < 0.0 || a.r_out < 0.0) return false;
    if (!std::isfinite(a.dir.x()) || !std::isfinite(a.dir.y())) return false;
    if (k + 1 < bs.size() && !(a.angle < b.angle)) return false;
    if ((a.r_out == 0.0) != (b.r_in == 0.0)) return false;
    // an edge spans less than a half turn
    if (a.r_out != 0.0 && bs.size() > 1 && !(ccw_gap(a.angle, b.angle) < std::numbers::pi)) return false;
  }
  return true;
}

RadialBreak axis_break(const std::vector<RadialBreak>& bs, const Point& axis) {
  const double angle = angle_of(axis);
  for (const auto& b : bs) {
    if (b.angle == angle) {
      RadialBreak snapped = b;
      snapped.dir = axis;
      return snapped;
    }
  }
  const std::size_t k = locate_sector(bs, angle);
  const double r = sector_radius(bs[k], bs[(k + 1) % bs.size()], axis);
  return RadialBreak{axis, angle, r, r};
}

// Breaks of p with the two axis directions inserted, ordered CCW.
struct Halves {
  std::vector<RadialBreak> right;  // -e2 ... +e2
  std::vector<RadialBreak> left;   // +e2 ... -e2
};

Halves split_breaks(const StarPolygon& p) {
  const Point up(0.0, 1.0), down(0.0, -1.0);
  const auto& bs = p.breaks();
  const RadialBreak top = axis_break(bs, up);
  const RadialBreak bottom = axis_break(bs, down);
  Halves h;
  h.right.push_back(bottom);
  for (const auto& b : bs)
    if (b.angle > bottom.angle && b.angle < top.angle) h.right.push_back(b);
  h.right.push_back(top);
  h.left.push_back(top);
  for (const auto& b : bs)
    if (b.angle > top.angle) h.left.push_back(b);
  for (const auto& b : bs)
    if (b.angle < bottom.angle) h.left.push_back(b);
  h.left.push_back(bottom);
  return h;
}

std::vector<RadialBreak> map_half(std::vector<RadialBreak> half, const Mat& a, double det) {
  half.front().r_in = 0.0;
  half.back().r_out = 0.0;
  const Eigen::Matrix2d m = a;
  for (auto& b : half) {
    const Point d = m * b.dir;
    const double stretch = d.norm();
    b.dir = d / stretch;
    b.angle = angle_of(b.dir);
    b.r_in *= stretch;
    b.r_out *= stretch;
  }
  if (det < 0.0) {
    std::reverse(half.begin(), half.end());
    for (auto& b : half) std::swap(b.r_in, b.r_out);
  }
  return normalize(std::move(half));
}

std::vector<Point> half_vertices(const std::vector<RadialBreak>& half) {
  std::vector<Point> out;
  for (std::size_t k = 0; k < half.size(); ++k) {
    const auto& b = half[k];
    if (k > 0 && b.r_in != 0.0) out.push_back(b.in());
    if (k + 1 < half.size() && b.r_out != 0.0 && (k == 0 || b.r_out != b.r_in)) out.push_back(b.out());
  }
  return out;
}

}  // namespace

StarPolygon StarPolygon::from_vertices(std::span<const Point> vertices) {
  if (vertices.size() < 3) throw std::invalid_argument("StarPolygon: need at least 3 vertices");
  for (const auto& v : vertices)
    if (!std::isfinite(v.x()) || !std::isfinite(v.y())) throw std::invalid_argument("StarPolygon: non-finite vertex");

  // Drop repeated origins so each gap is marked once.
  std::vector<Point> vs;
  for (const auto& v : vertices)
    if (!(is_zero(v) && !vs.empty() && is_zero(vs.back()))) vs.push_back(v);
  while (vs.size() > 1 && is_zero(vs.front()) && is_zero(vs.back())) vs.pop_back();
  const std::size_t n = vs.size();

  auto joins_previous = [&](std::size_t i) {
    const Point& prev = vs[(i + n - 1) % n];
    return !is_zero(vs[i]) && !is_zero(prev) && same_direction(prev, vs[i]);
  };
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(vs[i]) && !joins_previous(i)) {
      start = i;
      break;
    }
  }
  if (start == n) throw std::invalid_argument("StarPolygon: vertices do not surround any area");

  std::vector<RadialBreak> bs;
  std::size_t i = 0;
  while (i < n) {
    const std::size_t idx = (start + i) % n;
    if (is_zero(vs[idx])) {
      ++i;
      continue;
    }
    const Point& first = vs[idx];
    std::size_t j = i + 1;
    while (j < n && joins_previous((start + j) % n)) ++j;
    const Point& last = vs[(start + j - 1) % n];
    const bool gap_before = is_zero(vs[(idx + n - 1) % n]);
    const bool gap_after = is_zero(vs[(start + j) % n]);
    if (gap_before && gap_after) throw std::invalid_argument("StarPolygon: isolated spike through the origin");
    RadialBreak b = make_break(first);
    b.r_in = gap_before ? 0.0 : first.norm();
    b.r_out = gap_after ? 0.0 : last.norm();
    bs.push_back(b);
    i = j;
  }
  double sweep = 0.0;
  for (std::size_t k = 0; k < bs.size(); ++k) {
    const auto& a = bs[k];
    const auto& b = bs[(k + 1) % bs.size()];
    sweep += a.r_out == 0.0 ? ccw_gap(a.angle, b.angle) : std::atan2(cross(a.dir, b.dir), a.dir.dot(b.dir));
  }
  if (std::abs(sweep - kTwoPi) > 1e-9)
    throw std::invalid_argument("StarPolygon: boundary must wind once counter-clockwise around the origin");
  auto normalized = normalize(std::move(bs));
  if (!sectors_consistent(normalized))
    throw std::invalid_argument("StarPolygon: vertices are not radially convex about the origin");
  return StarPolygon(std::move(normalized));
}

StarPolygon StarPolygon::from_breaks(std::vector<RadialBreak> breaks) { return StarPolygon(normalize(std::move(breaks))); }

std::vector<Point> StarPolygon::vertices() const {
  std::vector<Point> out;
  out.reserve(breaks_.size() + 4);
  for (const auto& b : breaks_) {
    if (b.r_in != 0.0) out.push_back(b.in());
    if (b.r_out == 0.0) {
      out.push_back(Point::Zero());
    } else if (b.r_out != b.r_in) {
      out.push_back(b.out());
    }
  }
  return out;
}

double polygon_area(std::span<const Point> vs) {
  double twice = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) twice += cross(vs[i], vs[(i + 1) % vs.size()]);
  return 0.5 * twice;
}

double StarPolygon::area() const {
  const auto vs = vertices();
  return polygon_area(vs);
}

double StarPolygon::max_radius() const {
  double r = 0.0;
  for (const auto& b : breaks_) r = std::max({r, b.r_in, b.r_out});
  return r;
}

double StarPolygon::diameter() const {
  auto vs = vertices();
  if (vs.size() < 2) return 0.0;
  // Convex hull (monotone chain), then all hull pairs.
  std::sort(vs.begin(), vs.end(),
            [](const Point& a, const Point& b) { return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()); });
  std::vector<Point> hull(2 * vs.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], vs[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = vs[i];
  }
  for (std::size_t i = vs.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], vs[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = vs[i];
  }
  hull.resize(k > 1 ? k - 1 : k);
  double d2 = 0.0;
  for (std::size_t a = 0; a < hull.size(); ++a)
    for (std::size_t b = a + 1; b < hull.size(); ++b) d2 = std::max(d2, (hull[a] - hull[b]).squaredNorm());
  return std::sqrt(d2);
}

bool StarPolygon::origin_interior() const {
  if (breaks_.size() < 3) return false;
  return std::none_of(breaks_.begin(), breaks_.end(),
                      [](const RadialBreak& b) { return b.r_in == 0.0 || b.r_out == 0.0; });
}

StarPolygon StarPolygon::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("StarPolygon::scaled: factor must be positive");
  auto bs = breaks_;
  for (auto& b : bs) {
    b.r_in *= factor;
    b.r_out *= factor;
  }
  return StarPolygon(std::move(bs));
}

StarPolygon make_diamond() {
  const std::vector<Point> vs{Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1)};
  return StarPolygon::from_vertices(vs);
}

SwitchingSplit split_at_switching(const StarPolygon& p) {
  const Halves h = split_breaks(p);
  return {half_vertices(h.left), half_vertices(h.right)};
}

StarPolygon union_star(const StarPolygon& a, const StarPolygon& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const auto& as = a.breaks();
  const auto& bs = b.breaks();

  struct Slot {
    Point dir;
    double angle;
    Probe pa;
    Probe pb;
  };
  std::vector<Slot> slots;
  slots.reserve(as.size() + bs.size());
  std::size_t i = 0, j = 0;
  while (i < as.size() || j < bs.size()) {
    const RadialBreak* ra = i < as.size() ? &as[i] : nullptr;
    const RadialBreak* rb = j < bs.size() ? &bs[j] : nullptr;
    if (ra != nullptr && (rb == nullptr || ra->angle < rb->angle)) {
      slots.push_back({ra->dir, ra->angle, probe(as, ra, ra->dir, ra->angle), probe(bs, nullptr, ra->dir, ra->angle)});
      ++i;
    } else if (ra == nullptr || rb->angle < ra->angle) {
      slots.push_back({rb->dir, rb->angle, probe(as, nullptr, rb->dir, rb->angle), probe(bs, rb, rb->dir, rb->angle)});
      ++j;
    } else {
      slots.push_back({ra->dir, ra->angle, probe(as, ra, ra->dir, ra->angle), probe(bs, rb, rb->dir, rb->angle)});
      ++i;
      ++j;
    }
  }

  const std::size_t n = slots.size();
  struct SectorChoice {
    bool start_a;  // operand winning just after slot k
    bool end_a;    // operand winning just before slot k+1
    bool has_cross = false;
    Point cross_point = Point::Zero();
  };
  std::vector<SectorChoice> choice(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Slot& s0 = slots[k];
    const Slot& s1 = slots[(k + 1) % n];
    const double f = s0.pa.r_out - s0.pb.r_out;
    const double g = s1.pa.r_in - s1.pb.r_in;
    SectorChoice c;
    c.start_a = f > 0.0 || (f == 0.0 && g >= 0.0);
    c.end_a = g > 0.0 || (g == 0.0 && c.start_a);
    if (c.start_a != c.end_a) {
      Point x;
      const double span = n == 1 ? kTwoPi : ccw_gap(s0.angle, s1.angle);
      const Point a0 = s0.pa.r_out * s0.dir, a1 = s1.pa.r_in * s1.dir;
      const Point b0 = s0.pb.r_out * s0.dir, b1 = s1.pb.r_in * s1.dir;
      // solve on the starting winner's edge so the result is symmetric in a, b
      bool ok = (c.start_a ? line_intersection(a0, a1, b0, b1, x) : line_intersection(b0, b1, a0, a1, x)) &&
                !is_zero(x);
      if (ok) {
        const double off = ccw_gap(s0.angle, angle_of(x));
        ok = off > 0.0 && off < span;
      }
      if (ok) {
        c.has_cross = true;
        c.cross_point = x;
      } else if (std::abs(f) < std::abs(g)) {
        c.start_a = c.end_a;
      } else {
        c.end_a = c.start_a;
      }
    }
    choice[k] = c;
  }

  std::vector<RadialBreak> out;
  out.reserve(n + 8);
  for (std::size_t k = 0; k < n; ++k) {
    const Slot& s = slots[k];
    const SectorChoice& before = choice[(k + n - 1) % n];
    const SectorChoice& after = choice[k];
    const Probe& pin = before.end_a ? s.pa : s.pb;
    const Probe& pout = after.start_a ? s.pa : s.pb;
    const bool redundant = before.end_a == after.start_a && !pin.own;
    if (!redundant) out.push_back(RadialBreak{s.dir, s.angle, pin.r_in, pout.r_out});
    if (after.has_cross) {
      const Point& x = after.cross_point;
      out.push_back(make_break(x));
    }
  }
  return StarPolygon::from_breaks(std::move(out));
}

StarPolygon union_star(std::span<const StarPolygon> ps) {
  StarPolygon acc;
  for (const auto& p : ps) acc = union_star(acc, p);
  return acc;
}

StarPolygon simplify(const StarPolygon& p, double tol) {
  if (tol < 0.0) throw std::invalid_argument("simplify: tolerance must be non-negative");
  std::vector<RadialBreak> bs = p.breaks();
  bool changed = true;
  while (changed && bs.size() > 3) {
    changed = false;
    // micro radial edges
    for (auto& b : bs) {
      if (b.r_in != 0.0 && b.r_out != 0.0 && b.r_in != b.r_out && std::abs(b.r_in - b.r_out) <= tol) {
        b.r_out = b.r_in;
        changed = true;
      }
    }
    std::vector<RadialBreak> kept;
    kept.reserve(bs.size());
    const std::size_t n = bs.size();
    for (std::size_t k = 0; k < n; ++k) {
      const RadialBreak& b = bs[k];
      const RadialBreak& next = bs[(k + 1) % n];
      const RadialBreak& prev = kept.empty() ? bs[n - 1] : kept.back();
      if (kept.size() + (n - k) <= 3) {
        kept.push_back(b);
        continue;
      }
      // duplicate of the previous kept vertex
      if (!kept.empty() && prev.r_out != 0.0 && b.r_in != 0.0 && (prev.out() - b.in()).norm() <= tol) {
        kept.back().r_out = b.r_out;
        changed = true;
        continue;
      }
      if (b.r_in == b.r_out && b.r_in != 0.0 && prev.r_out != 0.0 && next.r_in != 0.0 &&
          cross(prev.dir, next.dir) > 0.0) {
        const Point chord = next.in() - prev.out();
        const double len = chord.norm();
        const double dist =
            len > 0.0 ? std::abs(cross(chord, b.in() - prev.out())) / len : (b.in() - prev.out()).norm();
        if (dist <= tol) {
          changed = true;
          continue;
        }
      }
      kept.push_back(b);
    }
    bs = std::move(kept);
  }
  return StarPolygon::from_breaks(std::move(bs));
}

StarPolygon image_polygon(const PwaMap<double>& map, const StarPolygon& p, double rel_tol) {
  if (map.dim() != 2) throw std::invalid_argument("image_polygon: map must be planar");
  if (map.mu() != 0.0) throw std::invalid_argument("image_polygon: map must be linear (mu = 0)");
  if (p.empty()) throw std::invalid_argument("image_polygon: empty polygon");
  const double det_left = map.left().determinant();
  const double det_right = map.right().determinant();
  if (det_left == 0.0 || det_right == 0.0) throw DegenerateImage("image_polygon: singular piece");

  const Halves h = split_breaks(p);
  StarPolygon result;
  for (const auto& [half, a, det] : {std::tuple{&h.right, &map.right(), det_right},
                                      std::tuple{&h.left, &map.left(), det_left}}) {
    auto mapped = map_half(*half, *a, det);
    if (mapped.size() < 2) continue;
    result = union_star(result, StarPolygon::from_breaks(std::move(mapped)));
  }
  if (result.empty() || !validate_radial(result)) throw DegenerateImage("image_polygon: image is not a valid star set");
  return simplify(result, rel_tol * result.max_radius());
}

bool validate(const StarPolygon& p) {
  const auto& bs = p.breaks();
  if (bs.size() < 3) return false;
  for (const auto& b : bs) {
    if (!(b.r_in > 0.0) || b.r_in != b.r_out || !std::isfinite(b.r_in)) return false;
  }
  return sectors_consistent(bs);
}

bool validate(std::span<const Point> vertices) {
  try {
    return validate(StarPolygon::from_vertices(vertices));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool validate_radial(const StarPolygon& p) {
  const auto& bs = p.breaks();
  if (bs.size() < 2) return false;
  return sectors_consistent(bs) && p.area() > 0.0;
}

double radius_at(const StarPolygon& p, const Point& dir) {
  const auto& bs = p.breaks();
  if (bs.empty()) return 0.0;
  const Point u = dir / dir.norm();
  const double angle = angle_of(u);
  for (const auto& b : bs)
    if (b.angle == angle) return std::max(b.r_in, b.r_out);
  const std::size_t k = locate_sector(bs, angle);
  return sector_radius(bs[k], bs[(k + 1) % bs.size()], u);
}

double point_segment_distance(const Point& q, const Point& a, const Point& b) {
  const Point ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (q - a).norm();
  const double t = std::clamp((q - a).dot(ab) / len2, 0.0, 1.0);
  return (q - (a + t * ab)).norm();
}

bool point_in_polygon(std::span<const Point> poly, const Point& q) {
  int winding = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const double side = cross(b - a, q - a);
    if (a.y() <= q.y()) {
      if (b.y() > q.y() && side > 0.0) ++winding;
    } else if (b.y() <= q.y() && side < 0.0) {
      --winding;
    }
  }
  return winding != 0;
}

namespace {
int orientation(const Point& a, const Point& b, const Point& c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}
bool on_segment(const Point& a, const Point& b, const Point& q) {
  return std::min(a.x(), b.x()) <= q.x() && q.x() <= std::max(a.x(), b.x()) && std::min(a.y(), b.y()) <= q.y() &&
         q.y() <= std::max(a.y(), b.y());
}
}  // namespace

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool contains_in_interior(const StarPolygon& outer, const StarPolygon& inner, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("contains_in_interior: eta must be positive");
  const auto out_vs = outer.vertices();
  const auto in_vs = inner.vertices();
  if (out_vs.size() < 3 || in_vs.empty()) return false;

  // Bounding boxes of outer edges for a cheap reject in the pairwise pass.
  struct Box {
    double x0, x1, y0, y1;
  };
  const std::size_t n = out_vs.size();
  std::vector<Box> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = out_vs[i];
    const Point& b = out_vs[(i + 1) % n];
    boxes[i] = {std::min(a.x(), b.x()), std::max(a.x(), b.x()), std::min(a.y(), b.y()), std::max(a.y(), b.y())};
  }

  for (const auto& q : in_vs) {
    if (!point_in_polygon(out_vs, q)) return false;
    for (std::size_t i = 0; i < n; ++i) {
      const Box& bx = boxes[i];
      const double dx = std::max({bx.x0 - q.x(), 0.0, q.x() - bx.x1});
      const double dy = std::max({bx.y0 - q.y(), 0.0, q.y() - bx.y1});
      if (dx >= eta || dy >= eta) continue;
      if (point_segment_distance(q, out_vs[i], out_vs[(i + 1) % n]) < eta) return false;
    }
  }
  const std::size_t m = in_vs.size();
  for (std::size_t j = 0; j < m; ++j) {
    const Point& c = in_vs[j];
    const Point& d = in_vs[(j + 1) % m];
    const Box eb{std::min(c.x(), d.x()), std::max(c.x(), d.x()), std::min(c.y(), d.y()), std::max(c.y(), d.y())};
    for (std::size_t i = 0; i < n; ++i) {
      const Box& bx = boxes[i];
      if (bx.x1 < eb.x0 || eb.x1 < bx.x0 || bx.y1 < eb.y0 || eb.y1 < bx.y0) continue;
      if (segments_intersect(c, d, out_vs[i], out_vs[(i + 1) % n])) return false;
    }
  }
  return true;
}

}  // namespace bcb
