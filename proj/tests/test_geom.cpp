#include <doctest.h>

#include <random>

#include "gasket/errors.hpp"
#include "gasket/gasket.hpp"
#include "gasket/geom.hpp"
#include "oracle.hpp"

using namespace gasket;
using namespace gasket::geom;

namespace {

Triangle unit_triangle() { return {vertex1(), vertex2(), vertex3()}; }

Point random_dyadic_point(std::mt19937& rng, int level = 8) {
  std::uniform_int_distribution<std::int64_t> dist(-(1 << level),
                                                   2 * (1 << level));
  return {Rat(dist(rng), 1 << level), Rat(dist(rng), 1 << level)};
}

}  // namespace

TEST_CASE("squared distances in the triangular basis") {
  CHECK(sq_dist(vertex1(), vertex2()) == Rat(1));
  CHECK(sq_dist(vertex2(), vertex3()) == Rat(1));
  CHECK(sq_dist(vertex1(), vertex3()) == Rat(1));
  // |m12 - v3|^2 = 3/4 (altitude of the unit triangle)
  CHECK(sq_dist(midpoint(vertex1(), vertex2()), vertex3()) == Rat(3, 4));
}

TEST_CASE("cartesian embedding") {
  auto [x, y] = vertex3().to_xy();
  CHECK(x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(y == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
  CHECK(vertex2().cart_x() == Rat(1));
  CHECK(vertex3().cart_y() == Quad3::sqrt3(Rat(1, 2)));
}

TEST_CASE("hull of the three corners is the unit triangle") {
  const Point pts[] = {vertex1(), vertex2(), vertex3()};
  auto hull = convex_hull(pts);
  REQUIRE(hull.verts.size() == 3);
  CHECK_FALSE(hull.degenerate());
  CHECK(hull.verts[0] == vertex1());
  CHECK(hull.verts[1] == vertex2());
  CHECK(hull.verts[2] == vertex3());
}

TEST_CASE("hull drops midpoints interior to the sides") {
  const Point pts[] = {vertex1(),
                       vertex2(),
                       vertex3(),
                       midpoint(vertex1(), vertex2()),
                       midpoint(vertex1(), vertex3()),
                       midpoint(vertex2(), vertex3())};
  auto hull = convex_hull(pts);
  CHECK(hull.verts.size() == 3);
}

TEST_CASE("hull of the level-5 sample is the unit triangle") {
  auto sample = vertex_sample(5);
  CHECK(sample.size() == 366);
  auto hull = convex_hull(sample);
  REQUIRE(hull.verts.size() == 3);
  CHECK(hull.verts[0] == vertex1());
  CHECK(hull.verts[1] == vertex2());
  CHECK(hull.verts[2] == vertex3());
}

TEST_CASE("hull degenerate cases") {
  CHECK_THROWS_AS(convex_hull(std::span<const Point>{}), DomainError);

  const Point one[] = {vertex2()};
  auto h1 = convex_hull(one);
  CHECK(h1.degenerate());
  CHECK(h1.verts.size() == 1);

  const Point collinear[] = {Point(Rat(0), Rat(0)), Point(Rat(1, 4), Rat(0)),
                             Point(Rat(1, 2), Rat(0)), Point(Rat(3, 4), Rat(0))};
  auto h2 = convex_hull(collinear);
  CHECK(h2.degenerate());
  REQUIRE(h2.verts.size() == 2);
  CHECK(h2.verts[0] == Point(Rat(0), Rat(0)));
  CHECK(h2.verts[1] == Point(Rat(3, 4), Rat(0)));
}

TEST_CASE("hull idempotence and monotonicity on random dyadic sets") {
  std::mt19937 rng(2024);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Point> pts;
    std::uniform_int_distribution<int> count(1, 40);
    int n = count(rng);
    for (int i = 0; i < n; ++i) pts.push_back(random_dyadic_point(rng));
    auto hull = convex_hull(pts);
    auto again = convex_hull(hull.verts);
    CHECK(again.verts == hull.verts);

    // subset hull stays inside the superset hull
    std::vector<Point> subset(pts.begin(), pts.begin() + (n + 1) / 2);
    auto sub = convex_hull(subset);
    if (!hull.degenerate()) {
      for (const Point& v : sub.verts)
        CHECK(hull.locate(v) != Location::Outside);
    }
  }
}

TEST_CASE("point location in triangles") {
  Triangle t1(vertex1(), midpoint(vertex1(), vertex2()),
              midpoint(vertex1(), vertex3()));
  CHECK(point_in_triangle(midpoint(vertex1(), vertex2()), t1) ==
        Location::OnBoundary);
  CHECK(point_in_triangle(vertex3(), t1) == Location::Outside);
  // Basis snap of the figure point (0.28, 0.16) at denominator 256.
  Point fig{Rat(48, 256), Rat(47, 256)};
  CHECK(point_in_triangle(fig, t1) == Location::Inside);
  CHECK_THROWS_AS(Triangle(vertex1(), vertex2(),
                           Point(Rat(1, 2), Rat(0))),
                  DomainError);
}

TEST_CASE("triangle orientation normalizes to counterclockwise") {
  Triangle t(vertex1(), vertex3(), vertex2());  // given clockwise
  CHECK(cross(t.a, t.b, t.c).sign() > 0);
  CHECK(t.area() == Quad3::sqrt3(Rat(1, 4)));
}

TEST_CASE("segment parameter recovery") {
  Point a = vertex1(), b = vertex2();
  auto t = param_on_segment(Point(Rat(3, 8), Rat(0)), a, b);
  REQUIRE(t.has_value());
  CHECK(*t == Rat(3, 8));
  CHECK_FALSE(param_on_segment(vertex3(), a, b).has_value());
  CHECK_FALSE(param_on_segment(Point(Rat(2), Rat(0)), a, b).has_value());
  CHECK_THROWS_AS(param_on_segment(a, a, a), DomainError);
}

TEST_CASE("side distances: incenter, vertex, base midpoint") {
  Triangle t = unit_triangle();

  auto at_incenter = side_distances(Point(Rat(1, 3), Rat(1, 3)), t);
  for (const auto& d : at_incenter) CHECK(d == Quad3::sqrt3(Rat(1, 6)));

  auto at_v1 = side_distances(vertex1(), t);
  CHECK(at_v1[0] == Quad3());                      // on side v1-v2
  CHECK(at_v1[1] == Quad3::sqrt3(Rat(1, 2)));      // opposite side
  CHECK(at_v1[2] == Quad3());                      // on side v3-v1

  auto at_m12 = side_distances(Point(Rat(1, 2), Rat(0)), t);
  CHECK(at_m12[0] == Quad3());
  CHECK(at_m12[1] == Quad3::sqrt3(Rat(1, 4)));
  CHECK(at_m12[2] == Quad3::sqrt3(Rat(1, 4)));
  CHECK(at_m12[0] + at_m12[1] + at_m12[2] == Quad3::sqrt3(Rat(1, 2)));

  CHECK_THROWS_AS(side_distances(Point(Rat(2), Rat(2)), t), DomainError);
}

TEST_CASE("Viviani identity on random equilateral triangles") {
  // Equilateral triangles with rational basis coordinates: rotating a lattice
  // direction by 60 degrees is the integer map (u, w) -> (-w, u + w).
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-64, 64);
  std::uniform_int_distribution<std::int64_t> side(1, 32);
  int tested = 0;
  while (tested < 1000) {
    Point a{Rat(coord(rng), 16), Rat(coord(rng), 16)};
    Rat s(side(rng), 8);
    int dir = static_cast<int>(coord(rng)) % 3;
    Point d = dir == 0   ? Point(s, Rat(0))
              : dir == 1 ? Point(Rat(0), s)
                         : Point(s, -s);
    Point rot{-d.w, d.u + d.w};
    Triangle t(a, a + d, a + rot);
    REQUIRE(t.is_equilateral());

    // random rational point inside: convex combination of the vertices
    std::uniform_int_distribution<std::int64_t> weight(1, 100);
    Rat wa(weight(rng)), wb(weight(rng)), wc(weight(rng));
    Rat total = wa + wb + wc;
    Point z = (wa * t.a + wb * t.b + wc * t.c) / total;
    if (point_in_triangle(z, t) == Location::Outside) continue;

    auto dist = side_distances(z, t);
    Quad3 sum = dist[0] + dist[1] + dist[2];
    CHECK(sum == Quad3::sqrt3(s / Rat(2)));  // exact
    CHECK(sum.to_double() ==
          doctest::Approx(s.to_double() * std::sqrt(3.0) / 2).epsilon(1e-12));
    ++tested;
  }
}

TEST_CASE("equilateral incircle radius") {
  CHECK(equilateral_incircle_radius(Rat(1)) == Quad3::sqrt3(Rat(1, 6)));
  CHECK(equilateral_incircle_radius(Rat(4, 5)).to_double() ==
        doctest::Approx(0.23094010767585033).epsilon(1e-14));
  CHECK(equilateral_incircle_radius(Rat(1, 1024)) ==
        Quad3::sqrt3(Rat(1, 6144)));
  CHECK_THROWS_AS(equilateral_incircle_radius(Rat(0)), DomainError);
  CHECK_THROWS_AS(equilateral_incircle_radius(Rat(-1)), DomainError);
}

TEST_CASE("inscribed disk of the unit triangle is exact") {
  auto hull = convex_hull(std::vector<Point>{vertex1(), vertex2(), vertex3()});
  auto disk = inscribed_disk(hull);
  REQUIRE(disk.exact_radius.has_value());
  CHECK(*disk.exact_radius == Quad3::sqrt3(Rat(1, 6)));
  REQUIRE(disk.exact_center.has_value());
  CHECK(*disk.exact_center == Point(Rat(1, 3), Rat(1, 3)));
  CHECK(disk.radius == doctest::Approx(std::sqrt(3.0) / 6).epsilon(1e-12));
  CHECK(disk.center_unique);
  CHECK(disk.cx == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(disk.cy == doctest::Approx(std::sqrt(3.0) / 6).epsilon(1e-12));
}

TEST_CASE("inscribed disk of the unit square (float layer)") {
  std::vector<std::pair<double, double>> square = {
      {0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto disk = inscribed_disk_xy(square);
  CHECK(disk.radius == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(disk.cx == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(disk.cy == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(disk.center_unique);

  std::vector<std::pair<double, double>> rect = {
      {0, 0}, {2, 0}, {2, 1}, {0, 1}};
  auto rdisk = inscribed_disk_xy(rect);
  CHECK(rdisk.radius == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(rdisk.center_unique);
}

TEST_CASE("inscribed disk of a degenerate hull is a zero-radius flag") {
  const Point collinear[] = {Point(Rat(0), Rat(0)), Point(Rat(1, 2), Rat(0)),
                             Point(Rat(1), Rat(0))};
  auto disk = inscribed_disk(convex_hull(collinear));
  CHECK(disk.degenerate);
  CHECK(disk.radius == 0.0);
  REQUIRE(disk.exact_radius.has_value());
  CHECK(disk.exact_radius->sign() == 0);
}

TEST_CASE("inscribed disk agrees with the grid oracle on random hulls") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<Point> pts;
    for (int i = 0; i < 24; ++i) pts.push_back(random_dyadic_point(rng, 6));
    auto hull = convex_hull(pts);
    if (hull.degenerate()) continue;
    auto disk = inscribed_disk(hull);
    double oracle = testoracle::brute_inradius(hull.verts);
    CHECK(disk.radius == doctest::Approx(oracle).epsilon(1e-9));
  }
}

TEST_CASE("inscribed disk of conv(E_8 within B(m12, 1/2))") {
  // Spec-pinned brute-force instance: enumerate the level-8 sample, keep the
  // points within distance 1/2 of m12, hull and inscribe.
  Point m12 = midpoint(vertex1(), vertex2());
  Rat r2(1, 4);
  std::vector<Point> inside;
  for (const Point& p : vertex_sample(8))
    if (sq_dist(p, m12) <= r2) inside.push_back(p);
  auto hull = convex_hull(inside);
  REQUIRE_FALSE(hull.degenerate());
  auto disk = inscribed_disk(hull);
  double oracle = testoracle::brute_inradius(hull.verts);
  CHECK(disk.radius == doctest::Approx(oracle).epsilon(1e-9));
  // Frozen from the support-triple oracle run (14 hull vertices).
  CHECK(disk.radius == doctest::Approx(0.24864401241467279).epsilon(1e-9));
}
