#include <doctest.h>

#include <set>

#include "gasket/errors.hpp"
#include "gasket/sumset.hpp"

using namespace gasket;
using namespace gasket::sumset;

TEST_CASE("two independent sides sum to the figure parallelogram") {
  auto para = segment_sum({vertex1(), vertex2()}, {vertex1(), vertex3()});
  REQUIRE(para.verts.size() == 4);
  CHECK_FALSE(para.degenerate());
  CHECK(para.verts[0] == vertex1() + vertex1());
  CHECK(para.verts[1] == vertex1() + vertex2());
  CHECK(para.verts[2] == vertex2() + vertex3());
  CHECK(para.verts[3] == vertex1() + vertex3());
  CHECK(para.area() == Quad3::sqrt3(Rat(1, 2)));  // = sqrt(3)/2

  auto disk = geom::inscribed_disk(para);
  REQUIRE(disk.exact_radius.has_value());
  CHECK(disk.exact_radius->sign() > 0);
  CHECK(*disk.exact_radius == Quad3::sqrt3(Rat(1, 4)));  // rhombus, side 1
  CHECK(disk.center_unique);
}

TEST_CASE("parallel segments collapse to a flagged segment") {
  auto flat = segment_sum({vertex1(), vertex2()}, {vertex1(), vertex2()});
  CHECK(flat.degenerate());
  REQUIRE(flat.verts.size() == 2);
  CHECK(flat.verts[0] == vertex1());
  CHECK(flat.verts[1] == Point(Rat(2), Rat(0)));
  CHECK_THROWS_AS(segment_sum({vertex1(), vertex1()}, {vertex1(), vertex2()}),
                  DomainError);
}

TEST_CASE("half-side parallelogram area matches the cross product") {
  auto para = segment_sum({vertex1(), midpoint(vertex1(), vertex2())},
                          {vertex1(), vertex3()});
  REQUIRE(para.verts.size() == 4);
  // |(m12 - v1) x (v3 - v1)| = (1/2)(sqrt(3)/2)
  CHECK(para.area() == Quad3::sqrt3(Rat(1, 4)));
}

TEST_CASE("kominers bound values") {
  auto corollary = kominers_min_summands({2, Quad3::sqrt3(Rat(1, 6)).to_double()});
  CHECK(corollary.threshold == doctest::Approx(77.37).epsilon(2e-4));
  CHECK(corollary.min_summands == 78);

  auto line = kominers_min_summands({1, 1.0});
  CHECK(line.threshold == doctest::Approx(5.8284271247).epsilon(1e-9));
  CHECK(line.min_summands == 6);

  auto plane = kominers_min_summands({2, 1.0});
  CHECK(plane.threshold == doctest::Approx(8.2426406871).epsilon(1e-9));
  CHECK(plane.min_summands == 9);

  CHECK_THROWS_AS(kominers_min_summands({2, 0.0}), DomainError);
  CHECK_THROWS_AS(kominers_min_summands({2, -0.5}), DomainError);
  CHECK_THROWS_AS(kominers_min_summands({0, 0.5}), DomainError);
}

TEST_CASE("kominers bound monotonicity") {
  long long prev = 1LL << 60;
  for (int k = 1; k <= 20; ++k) {  // nonincreasing in c
    auto res = kominers_min_summands({2, k / 20.0});
    CHECK(res.min_summands <= prev);
    prev = res.min_summands;
  }
  prev = 0;
  for (int d = 1; d <= 8; ++d) {  // nondecreasing in d
    auto res = kominers_min_summands({d, 0.25});
    CHECK(res.min_summands >= prev);
    prev = res.min_summands;
  }
}

TEST_CASE("minkowski sums deduplicate exactly") {
  auto base = vertex_sample(1);
  REQUIRE(base.size() == 6);
  auto sums = minkowski_sum(base, base);
  // The 21 unordered pairs collapse onto the 15 half-step lattice points of
  // the doubled triangle: v1+m23 = m12+m13, v1+v2 = m12+m12, and so on.
  CHECK(sums.size() == 15);

  // independent recount with a separate container
  std::set<std::pair<std::pair<std::int64_t, std::int64_t>,
                     std::pair<std::int64_t, std::int64_t>>>
      seen;
  for (const Point& a : base)
    for (const Point& b : base) {
      Point s = a + b;
      seen.insert({{s.u.num(), s.u.den()}, {s.w.num(), s.w.den()}});
    }
  CHECK(seen.size() == sums.size());

  CHECK(minkowski_sum(base, base) == minkowski_sum(base, base));
  auto level2 = vertex_sample(2);
  CHECK(minkowski_sum(base, level2) == minkowski_sum(level2, base));
  // associativity on sets
  auto left = minkowski_sum(minkowski_sum(base, base), base);
  auto right = minkowski_sum(base, minkowski_sum(base, base));
  CHECK(left == right);
}

TEST_CASE("dyadic side sums fill the parallelogram lattice") {
  auto side_a = side_dyadics(Word(), 1, 3);  // 9 points on [v1, v2]
  auto side_b = side_dyadics(Word(), 3, 3);  // 9 points on [v3, v1]
  std::vector<Point> a, b;
  for (const auto& wp : side_a) a.push_back(wp.p);
  for (const auto& wp : side_b) b.push_back(wp.p);
  auto sums = minkowski_sum(a, b);
  CHECK(sums.size() == 81);  // 9 x 9 grid, no coincidences

  auto para = segment_sum({vertex1(), vertex2()}, {vertex1(), vertex3()});
  for (const Point& p : sums)
    CHECK(para.locate(p) != geom::Location::Outside);
}

TEST_CASE("sumset samples stay inside the exact parallelogram") {
  SumsetConfig cfg;
  cfg.n_terms = 1;
  cfg.sample_level = 0;
  auto single = sumset_sample(cfg);
  REQUIRE(single.size() == 3);
  CHECK(single[0] == vertex1());

  cfg.n_terms = 2;
  cfg.sample_level = 1;
  CHECK(sumset_sample(cfg).size() == 15);

  cfg.n_terms = 0;
  CHECK_THROWS_AS(sumset_sample(cfg), DomainError);
  cfg.n_terms = 3;
  cfg.sample_level = 5;
  cfg.budget = 1000;
  CHECK_THROWS_AS(sumset_sample(cfg), ResourceError);
}

TEST_CASE("coverage check: dense lattice covers the center disk") {
  auto side_a = side_dyadics(Word(), 1, 6);
  auto side_b = side_dyadics(Word(), 3, 6);
  std::vector<Point> a, b;
  for (const auto& wp : side_a) a.push_back(wp.p);
  for (const auto& wp : side_b) b.push_back(wp.p);
  auto sums = minkowski_sum(a, b);

  geom::Disk disk;
  disk.cx = 0.75;
  disk.cy = std::sqrt(3.0) / 4;
  disk.radius = 0.2;
  auto rep = interior_coverage_check(sums, disk, Rat(1, 32));
  CHECK(rep.covered);
  CHECK(rep.nodes > 0);
  CHECK(rep.worst_gap <= (1.0 / 64) / std::sqrt(3.0) + 1e-9);
}

TEST_CASE("coverage check fails on sparse or empty sets") {
  geom::Disk disk;
  disk.cx = 0.5;
  disk.cy = 0.3;
  disk.radius = 0.25;
  std::vector<Point> sparse = {vertex1(), vertex2(), vertex3()};
  auto rep = interior_coverage_check(sparse, disk, Rat(1, 64));
  CHECK_FALSE(rep.covered);
  CHECK(rep.worst_gap > 1.0 / 64);

  auto empty_rep = interior_coverage_check({}, disk, Rat(1, 64));
  CHECK_FALSE(empty_rep.covered);
  CHECK(empty_rep.uncovered_nodes == empty_rep.nodes);

  CHECK_THROWS_AS(interior_coverage_check(sparse, disk, Rat(0)), DomainError);
}
