#include "gasket/geom.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gasket/errors.hpp"

namespace gasket::geom {

Triangle::Triangle(Point a_, Point b_, Point c_) : a(a_), b(b_), c(c_) {
  int o = orient(a, b, c);
  if (o == 0) throw DomainError("degenerate triangle");
  if (o < 0) std::swap(b, c);
}

std::pair<Point, Point> Triangle::side(int i) const {
  switch (i) {
    case 1:
      return {a, b};
    case 2:
      return {b, c};
    case 3:
      return {c, a};
    default:
      throw DomainError("side index must be 1..3");
  }
}

std::array<Rat, 3> Triangle::sq_sides() const {
  return {sq_dist(a, b), sq_dist(b, c), sq_dist(c, a)};
}

bool Triangle::is_equilateral() const {
  auto s = sq_sides();
  return s[0] == s[1] && s[1] == s[2];
}

Quad3 ConvexPolygon::area() const {
  if (degenerate()) return Quad3();
  Rat twice(0);
  for (std::size_t i = 1; i + 1 < verts.size(); ++i)
    twice += cross(verts[0], verts[i], verts[i + 1]);
  return Quad3::sqrt3(twice / Rat(4));
}

Location ConvexPolygon::locate(const Point& p) const {
  if (verts.empty()) return Location::Outside;
  if (verts.size() == 1)
    return p == verts[0] ? Location::OnBoundary : Location::Outside;
  if (verts.size() == 2)
    return param_on_segment(p, verts[0], verts[1]) ? Location::OnBoundary
                                                   : Location::Outside;
  bool boundary = false;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    int o = orient(verts[i], verts[(i + 1) % verts.size()], p);
    if (o < 0) return Location::Outside;
    if (o == 0) boundary = true;
  }
  return boundary ? Location::OnBoundary : Location::Inside;
}

ConvexPolygon convex_hull(std::span<const Point> points) {
  if (points.empty()) throw DomainError("empty point set");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const std::size_t n = pts.size();
  if (n <= 2) return ConvexPolygon{std::move(pts)};

  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first; collinear input
                       // collapses to its two extremes, a flat polygon
  return ConvexPolygon{std::move(hull)};
}

Location point_in_triangle(const Point& p, const Triangle& t) {
  int o1 = orient(t.a, t.b, p);
  int o2 = orient(t.b, t.c, p);
  int o3 = orient(t.c, t.a, p);
  if (o1 < 0 || o2 < 0 || o3 < 0) return Location::Outside;
  if (o1 == 0 || o2 == 0 || o3 == 0) return Location::OnBoundary;
  return Location::Inside;
}

std::optional<Rat> param_on_segment(const Point& p, const Point& A,
                                    const Point& B) {
  if (A == B) throw DomainError("degenerate segment");
  if (cross(A, B, p).sign() != 0) return std::nullopt;
  Rat du = B.u - A.u;
  Rat t = !du.is_zero() ? (p.u - A.u) / du : (p.w - A.w) / (B.w - A.w);
  if (t < Rat(0) || t > Rat(1)) return std::nullopt;
  if (A + t * (B - A) != p) return std::nullopt;
  return t;
}

std::array<Quad3, 3> side_distances(const Point& z, const Triangle& t) {
  if (point_in_triangle(z, t) == Location::Outside)
    throw DomainError("point outside triangle");
  std::array<Quad3, 3> out;
  for (int i = 1; i <= 3; ++i) {
    auto [A, B] = t.side(i);
    auto len = sqrt_exact(sq_dist(A, B));
    if (!len)
      throw DomainError("side length is irrational; exact distance undefined");
    // Cartesian cross product is the basis cross times sqrt(3)/2; the point
    // is on the interior side of every edge, so the cross is nonnegative.
    Rat cr = cross(A, B, z);
    out[i - 1] = Quad3::sqrt3(cr / (Rat(2) * *len));
  }
  return out;
}

Quad3 equilateral_incircle_radius(const Rat& side) {
  if (side.sign() <= 0) throw DomainError("side must be positive");
  return Quad3::sqrt3(side / Rat(6));
}

// ---------------------------------------------------------------------------
// Chebyshev disk: three-variable LP solved with Seidel's randomized
// incremental algorithm. Variables x = (cx, cy, rho); one constraint per
// polygon edge, rho <= inward_normal . (center - edge_point).
// ---------------------------------------------------------------------------

namespace {

using Vec3 = std::array<double, 3>;

struct Constraint {
  Vec3 a;
  double b;  // a . x <= b
};

double dot(const Vec3& a, const Vec3& x, int dim) {
  double s = 0;
  for (int i = 0; i < dim; ++i) s += a[i] * x[i];
  return s;
}

constexpr double kLpEps = 1e-12;

// Maximize c . x over the box [lo, hi] intersected with the constraints.
// Deterministic: the shuffle is seeded per solve.
std::optional<Vec3> lp_rec(int dim, std::vector<Constraint> cons, Vec3 c,
                           Vec3 lo, Vec3 hi, std::mt19937& rng) {
  if (dim == 1) {
    double L = lo[0], H = hi[0];
    for (const auto& cn : cons) {
      double a = cn.a[0];
      if (std::abs(a) < 1e-30) {
        if (cn.b < -kLpEps) return std::nullopt;
        continue;
      }
      double x = cn.b / a;
      if (a > 0)
        H = std::min(H, x);
      else
        L = std::max(L, x);
    }
    if (L > H + kLpEps) return std::nullopt;
    if (L > H) L = H = 0.5 * (L + H);
    Vec3 r{};
    r[0] = c[0] >= 0 ? H : L;
    return r;
  }

  std::shuffle(cons.begin(), cons.end(), rng);
  Vec3 x{};
  for (int k = 0; k < dim; ++k) x[k] = c[k] >= 0 ? hi[k] : lo[k];

  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (dot(cons[i].a, x, dim) <= cons[i].b + kLpEps) continue;

    // Optimum lies on cons[i]'s hyperplane: eliminate the variable with the
    // largest coefficient and recurse on the prefix constraints.
    int k = 0;
    for (int j = 1; j < dim; ++j)
      if (std::abs(cons[i].a[j]) > std::abs(cons[i].a[k])) k = j;
    double ak = cons[i].a[k];
    if (std::abs(ak) < 1e-30) return std::nullopt;

    auto reduce = [&](const Vec3& a, double b, Vec3& ra, double& rb) {
      double f = a[k] / ak;
      int jj = 0;
      for (int j = 0; j < dim; ++j) {
        if (j == k) continue;
        ra[jj++] = a[j] - f * cons[i].a[j];
      }
      rb = b - f * cons[i].b;
    };

    std::vector<Constraint> sub;
    sub.reserve(i + 2);
    for (std::size_t j = 0; j < i; ++j) {
      Constraint rc{};
      reduce(cons[j].a, cons[j].b, rc.a, rc.b);
      sub.push_back(rc);
    }
    {
      Vec3 ek{};  // box bounds of the eliminated variable
      ek[k] = 1.0;
      Constraint up{}, down{};
      reduce(ek, hi[k], up.a, up.b);
      sub.push_back(up);
      ek[k] = -1.0;
      reduce(ek, -lo[k], down.a, down.b);
      sub.push_back(down);
    }
    Vec3 rc{}, rlo{}, rhi{};
    {
      double f = c[k] / ak;
      int jj = 0;
      for (int j = 0; j < dim; ++j) {
        if (j == k) continue;
        rc[jj] = c[j] - f * cons[i].a[j];
        rlo[jj] = lo[j];
        rhi[jj] = hi[j];
        ++jj;
      }
    }
    auto sol = lp_rec(dim - 1, std::move(sub), rc, rlo, rhi, rng);
    if (!sol) return std::nullopt;
    int jj = 0;
    double xk = cons[i].b;
    for (int j = 0; j < dim; ++j) {
      if (j == k) continue;
      x[j] = (*sol)[jj++];
      xk -= cons[i].a[j] * x[j];
    }
    x[k] = xk / ak;
  }
  return x;
}

struct Edge {
  double nx, ny;  // unit inward normal
  double off;     // n . p for a point p on the edge
};

Disk chebyshev_from_edges(const std::vector<Edge>& edges, double lox,
                          double hix, double loy, double hiy) {
  std::vector<Constraint> cons;
  cons.reserve(edges.size());
  for (const auto& e : edges)
    cons.push_back({{-e.nx, -e.ny, 1.0}, -e.off});

  double diag = std::hypot(hix - lox, hiy - loy);
  Vec3 lo{lox, loy, 0.0};
  Vec3 hi{hix, hiy, 0.5 * diag + 1.0};
  std::mt19937 rng(0x5eed);
  auto sol = lp_rec(3, std::move(cons), Vec3{0, 0, 1}, lo, hi, rng);

  Disk d;
  if (!sol) {  // cannot happen for a nonempty polygon; report flat
    d.degenerate = true;
    return d;
  }
  d.cx = (*sol)[0];
  d.cy = (*sol)[1];
  d.radius = std::max(0.0, (*sol)[2]);

  // The optimum radius is unique but the center slides when the tight edge
  // normals fit inside a closed half-plane (e.g. a non-square rectangle).
  std::vector<double> angles;
  double tol = 1e-9 * (1.0 + d.radius);
  for (const auto& e : edges) {
    double slack = (e.nx * d.cx + e.ny * d.cy - e.off) - d.radius;
    if (std::abs(slack) <= tol) angles.push_back(std::atan2(e.ny, e.nx));
  }
  std::sort(angles.begin(), angles.end());
  if (angles.size() < 3) {
    d.center_unique = false;
  } else {
    double max_gap = 0;
    for (std::size_t i = 0; i + 1 < angles.size(); ++i)
      max_gap = std::max(max_gap, angles[i + 1] - angles[i]);
    max_gap = std::max(max_gap,
                       2 * M_PI - (angles.back() - angles.front()));
    d.center_unique = max_gap < M_PI - 1e-9;
  }
  if (d.radius <= tol) d.degenerate = true;
  return d;
}

Disk exact_disk(const Point& center, const Quad3& radius) {
  Disk d;
  auto [x, y] = center.to_xy();
  d.cx = x;
  d.cy = y;
  d.radius = radius.to_double();
  d.exact_center = center;
  d.exact_radius = radius;
  return d;
}

}  // namespace

Disk inscribed_disk_xy(std::span<const std::pair<double, double>> verts) {
  Disk d;
  if (verts.size() < 3) {
    d.degenerate = true;
    if (!verts.empty()) {
      for (const auto& [x, y] : verts) {
        d.cx += x;
        d.cy += y;
      }
      d.cx /= verts.size();
      d.cy /= verts.size();
    }
    return d;
  }
  std::vector<Edge> edges;
  edges.reserve(verts.size());
  double lox = verts[0].first, hix = lox, loy = verts[0].second, hiy = loy;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto [x0, y0] = verts[i];
    auto [x1, y1] = verts[(i + 1) % verts.size()];
    lox = std::min(lox, x0);
    hix = std::max(hix, x0);
    loy = std::min(loy, y0);
    hiy = std::max(hiy, y0);
    double ex = x1 - x0, ey = y1 - y0;
    double len = std::hypot(ex, ey);
    if (len < 1e-30) continue;
    // CCW polygon: inward normal is the edge direction rotated +90 degrees.
    double nx = -ey / len, ny = ex / len;
    edges.push_back({nx, ny, nx * x0 + ny * y0});
  }
  if (edges.size() < 3) {
    d.degenerate = true;
    return d;
  }
  return chebyshev_from_edges(edges, lox, hix, loy, hiy);
}

Disk inscribed_disk(const ConvexPolygon& poly) {
  if (poly.degenerate()) {
    Disk d;
    d.degenerate = true;
    d.exact_radius = Quad3();
    if (poly.verts.size() == 1) {
      d.exact_center = poly.verts[0];
    } else if (poly.verts.size() == 2) {
      d.exact_center = midpoint(poly.verts[0], poly.verts[1]);
    } else {
      throw DomainError("empty polygon");
    }
    auto [x, y] = d.exact_center->to_xy();
    d.cx = x;
    d.cy = y;
    return d;
  }

  if (poly.verts.size() == 3) {
    Triangle t(poly.verts[0], poly.verts[1], poly.verts[2]);
    if (t.is_equilateral()) {
      if (auto side = sqrt_exact(t.sq_sides()[0])) {
        // Incenter of an equilateral triangle is its centroid.
        return exact_disk((t.a + t.b + t.c) / Rat(3),
                          equilateral_incircle_radius(*side));
      }
    }
  }

  if (poly.verts.size() == 4) {
    const auto& v = poly.verts;
    if (v[1] - v[0] == v[2] - v[3]) {  // parallelogram
      auto s1 = sqrt_exact(sq_dist(v[0], v[1]));
      auto s2 = sqrt_exact(sq_dist(v[1], v[2]));
      if (s1 && s2) {
        // Radius is half the smaller height: area / (2 * longer side). The
        // center is unique only for a rhombus, where the disk meets all
        // four sides.
        Rat longer = std::max(*s1, *s2);
        Disk d = exact_disk(midpoint(v[0], v[2]),
                            poly.area() / (Rat(2) * longer));
        d.center_unique = (*s1 == *s2);
        return d;
      }
    }
  }

  std::vector<std::pair<double, double>> xy;
  xy.reserve(poly.verts.size());
  for (const auto& p : poly.verts) xy.push_back(p.to_xy());
  return inscribed_disk_xy(xy);
}

}  // namespace gasket::geom
