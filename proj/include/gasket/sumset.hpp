#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gasket/gasket.hpp"
#include "gasket/geom.hpp"

namespace gasket::sumset {

struct Segment {
  Point a;
  Point b;
};

// Minkowski sum of two segments: a parallelogram when the directions are
// independent, a flat 2-vertex polygon when parallel.
geom::ConvexPolygon segment_sum(const Segment& s1, const Segment& s2);

struct BoundQuery {
  int dimension;
  double thickness;  // common thickness c, 0 < c <= 1
};

struct BoundResult {
  double threshold;       // sqrt(d) / (sqrt(1+c) - 1)^2
  long long min_summands;  // smallest integer strictly above the threshold
};

// Many-summand interior bound: n-fold sums of sets with thickness >= c in
// R^d have nonempty interior once n exceeds the threshold.
BoundResult kominers_min_summands(const BoundQuery& q);

// Pairwise sums with exact deduplication; throws ResourceError when
// |a| * |b| exceeds the budget.
std::vector<Point> minkowski_sum(std::span<const Point> a,
                                 std::span<const Point> b,
                                 std::size_t budget = 50'000'000);

struct SumsetConfig {
  int n_terms = 2;
  int sample_level = 3;
  Rat coverage_spacing = Rat(1, 32);
  std::size_t budget = 50'000'000;
};

// n_terms-fold Minkowski sum of the level-sample of E, deduplicated exactly;
// a subset of nE since every summand is a witnessed point of E.
std::vector<Point> sumset_sample(const SumsetConfig& cfg,
                                 int level_cap = kDefaultLevelCap);

struct CoverageReport {
  bool covered;      // every grid node in the disk has a sample within spacing
  double worst_gap;  // largest node-to-nearest-sample distance
  std::size_t nodes;
  std::size_t uncovered_nodes;
};

// Covering-density evidence for interior claims: checks every node of a
// square grid of the given pitch inside the disk. Evidence only; the exact
// parallelogram from segment_sum is the actual interior proof for E+E.
CoverageReport interior_coverage_check(std::span<const Point> points,
                                       const geom::Disk& disk,
                                       const Rat& spacing);

}  // namespace gasket::sumset
