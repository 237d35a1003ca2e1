#pragma once

// Polygons that are radially convex about the origin, stored by their radial
// breakpoints. Union is a pointwise maximum of radial functions, so the
// result stays in the same class without general polygon clipping.

#include "bcb/pwa_map.hpp"

#include <Eigen/Dense>

#include <span>
#include <stdexcept>
#include <vector>

namespace bcb {

using Point = Eigen::Vector2d;

/// A piecewise-linear image collapsed (singular piece) or lost its area.
class DegenerateImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One direction at which the boundary has a vertex.
///
/// `r_in` is the radius reached when approaching the direction from the
/// clockwise side, `r_out` the radius the next edge leaves from. They differ
/// only on a radial edge; a zero radius marks an angular gap (no area on that
/// side of the direction). Sharing one direction keeps radial edges exactly
/// radial under repeated linear maps.
struct RadialBreak {
  Point dir;           // unit vector
  double angle = 0.0;  // atan2(dir.y, dir.x), in (-pi, pi]
  double r_in = 0.0;
  double r_out = 0.0;

  Point in() const { return r_in * dir; }
  Point out() const { return r_out * dir; }
};

class StarPolygon {
 public:
  StarPolygon() = default;

  /// Counter-clockwise vertex list, closed implicitly. The origin may appear
  /// as a vertex, which marks an angular gap. Throws std::invalid_argument
  /// if the list is not a polygon that is radially convex about the origin.
  static StarPolygon from_vertices(std::span<const Point> vertices);

  /// Takes breaks in cyclic counter-clockwise order; rotates them to start
  /// at the smallest angle and merges breaks with equal angles.
  static StarPolygon from_breaks(std::vector<RadialBreak> breaks);

  const std::vector<RadialBreak>& breaks() const { return breaks_; }
  std::vector<Point> vertices() const;
  std::size_t vertex_count() const { return vertices().size(); }
  bool empty() const { return breaks_.empty(); }

  double area() const;
  double max_radius() const;
  double diameter() const;
  bool origin_interior() const;

  StarPolygon scaled(double factor) const;

  friend bool operator==(const StarPolygon& a, const StarPolygon& b) { return a.vertices() == b.vertices(); }

 private:
  explicit StarPolygon(std::vector<RadialBreak> breaks) : breaks_(std::move(breaks)) {}
  std::vector<RadialBreak> breaks_;
};

/// The square with vertices (+-1, 0), (0, +-1).
StarPolygon make_diamond();

struct SwitchingSplit {
  std::vector<Point> left;   // closed sub-polygon in x1 <= 0
  std::vector<Point> right;  // closed sub-polygon in x1 >= 0
};

/// Splits along x1 = 0, inserting the crossings with the x2-axis.
SwitchingSplit split_at_switching(const StarPolygon& p);

/// Default simplification tolerance relative to the polygon radius.
inline constexpr double kSimplifyRelTol = 1e-12;

/// g(p) for the piecewise-linear part of a planar map (mu must be 0).
/// Simplifies with tolerance `rel_tol * max_radius` of the image.
/// Throws DegenerateImage if a piece is singular or the image loses area.
StarPolygon image_polygon(const PwaMap<double>& map, const StarPolygon& p, double rel_tol = kSimplifyRelTol);

/// Radial maximum of the operands.
StarPolygon union_star(const StarPolygon& a, const StarPolygon& b);
StarPolygon union_star(std::span<const StarPolygon> ps);

/// Every vertex of `inner` lies inside `outer` at distance >= eta from its
/// boundary, and no edge of `inner` meets an edge of `outer`.
/// True is a conservative affirmation; false means "not verified".
bool contains_in_interior(const StarPolygon& outer, const StarPolygon& inner, double eta);

/// Removes duplicate vertices and vertices within `tol` of the chord of
/// their neighbours.
StarPolygon simplify(const StarPolygon& p, double tol);

/// Strict invariants: origin strictly interior, strictly increasing vertex
/// angles, every boundary ray met exactly once.
bool validate(const StarPolygon& p);
bool validate(std::span<const Point> vertices);

/// Weak invariants: radially convex about the origin with the origin in the
/// closure, positive area.
bool validate_radial(const StarPolygon& p);

/// Radial function: distance from the origin to the boundary along `dir`
/// (the larger one-sided value on a radial edge).
double radius_at(const StarPolygon& p, const Point& dir);

/// Shoelace area of a closed vertex list.
double polygon_area(std::span<const Point> vertices);

/// Distance from q to the segment [a, b].
double point_segment_distance(const Point& q, const Point& a, const Point& b);

/// Winding-number test; points on the boundary may go either way.
bool point_in_polygon(std::span<const Point> polygon, const Point& q);

/// Closed segments [a, b] and [c, d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace bcb
