#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gasket/point.hpp"

namespace gasket::geom {

enum class Location { Inside, OnBoundary, Outside };

// Triangle with exact vertices, normalized counterclockwise.
// Side i joins vertex i to vertex i+1 (1-based, cyclic):
//   side 1 = a->b, side 2 = b->c, side 3 = c->a.
struct Triangle {
  Point a, b, c;

  Triangle(Point a_, Point b_, Point c_);

  std::array<Point, 3> vertices() const { return {a, b, c}; }
  std::pair<Point, Point> side(int i) const;
  std::array<Rat, 3> sq_sides() const;
  Quad3 area() const { return Quad3::sqrt3(cross(a, b, c) / Rat(4)); }
  // All three squared side lengths equal.
  bool is_equilateral() const;
};

// Strictly convex counterclockwise vertex chain. Fewer than 3 vertices marks
// a degenerate hull (a point or a flat segment); such polygons carry inscribed
// radius 0 rather than being an error, since the thickness estimator must
// treat collinear samples as radius-0 evidence.
struct ConvexPolygon {
  std::vector<Point> verts;

  bool degenerate() const { return verts.size() < 3; }
  Quad3 area() const;
  Location locate(const Point& p) const;
};

// Convex hull of a nonempty finite point set (Andrew's monotone chain with
// exact orientation tests; collinear vertices dropped). Runs in the triangular
// basis, which is an orientation-preserving linear image of the plane, so the
// extracted vertex chain is the Cartesian hull as well.
ConvexPolygon convex_hull(std::span<const Point> points);

Location point_in_triangle(const Point& p, const Triangle& t);

// Affine parameter t in [0,1] with p = A + t*(B-A), if p lies on the segment.
std::optional<Rat> param_on_segment(const Point& p, const Point& A,
                                    const Point& B);

// Exact perpendicular distances from z to the three sides, indexed like
// Triangle::side. Requires z inside or on the triangle and every side length
// rational; both hold for every triangle this project constructs. For an
// equilateral triangle of side s the three distances sum to s*sqrt(3)/2.
std::array<Quad3, 3> side_distances(const Point& z, const Triangle& t);

// side * sqrt(3)/6, the inradius of an equilateral triangle.
Quad3 equilateral_incircle_radius(const Rat& side);

// Closed disk. The float view is always filled in; exact center/radius are
// present where the construction derives them (equilateral triangles,
// parallelograms, certificate incircles).
struct Disk {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;
  std::optional<Point> exact_center;
  std::optional<Quad3> exact_radius;
  bool degenerate = false;
  bool center_unique = true;
};

// Maximum-radius disk contained in the polygon (Chebyshev disk). The radius
// is unique; the center may not be, in which case center_unique is false and
// any maximizer is reported. Equilateral triangles and parallelograms with
// rational side lengths take an exact path; everything else solves the
// three-variable linear program max rho s.t. rho <= dist(center, edge line).
Disk inscribed_disk(const ConvexPolygon& poly);

// Float-layer variant for polygons with no exact basis representation
// (vertices counterclockwise in Cartesian coordinates).
Disk inscribed_disk_xy(std::span<const std::pair<double, double>> verts);

}  // namespace gasket::geom
