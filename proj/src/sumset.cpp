#include "gasket/sumset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gasket/errors.hpp"

namespace gasket::sumset {

geom::ConvexPolygon segment_sum(const Segment& s1, const Segment& s2) {
  if (s1.a == s1.b || s2.a == s2.b)
    throw DomainError("segments must be nondegenerate");
  const Point corners[4] = {s1.a + s2.a, s1.a + s2.b, s1.b + s2.a,
                            s1.b + s2.b};
  return geom::convex_hull(corners);
}

BoundResult kominers_min_summands(const BoundQuery& q) {
  if (q.dimension < 1) throw DomainError("dimension must be >= 1");
  if (!(q.thickness > 0.0) || q.thickness > 1.0)
    throw DomainError("thickness must lie in (0, 1]");
  double root = std::sqrt(1.0 + q.thickness) - 1.0;
  double threshold = std::sqrt(static_cast<double>(q.dimension)) / (root * root);
  return {threshold, static_cast<long long>(std::floor(threshold)) + 1};
}

std::vector<Point> minkowski_sum(std::span<const Point> a,
                                 std::span<const Point> b,
                                 std::size_t budget) {
  if (a.empty() || b.empty()) throw DomainError("empty summand set");
  if (a.size() > budget / b.size())
    throw ResourceError(
        "sum enumeration over budget; lower the sample level or term count");
  std::vector<Point> out;
  out.reserve(a.size() * b.size());
  for (const Point& p : a)
    for (const Point& q : b) out.push_back(p + q);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> sumset_sample(const SumsetConfig& cfg, int level_cap) {
  if (cfg.n_terms < 1) throw DomainError("n_terms must be >= 1");
  auto base = vertex_sample(cfg.sample_level, level_cap);
  std::vector<Point> acc = base;
  for (int k = 1; k < cfg.n_terms; ++k)
    acc = minkowski_sum(acc, base, cfg.budget);
  return acc;
}

CoverageReport interior_coverage_check(std::span<const Point> points,
                                       const geom::Disk& disk,
                                       const Rat& spacing) {
  if (spacing.sign() <= 0) throw DomainError("spacing must be positive");
  const double h = spacing.to_double();
  const double r = disk.radius;

  std::vector<std::pair<double, double>> xy;
  xy.reserve(points.size());
  for (const Point& p : points) xy.push_back(p.to_xy());

  CoverageReport rep{true, 0.0, 0, 0};
  const long long span = static_cast<long long>(std::floor(r / h));
  if (span > 512 || (span + 1) * (span + 1) * 4 *
                            static_cast<long long>(points.size() + 1) >
                        2'000'000'000LL)
    throw ResourceError(
        "coverage grid too fine for this disk and sample size; coarsen the "
        "spacing");
  for (long long i = -span; i <= span; ++i) {
    for (long long j = -span; j <= span; ++j) {
      double dx = i * h, dy = j * h;
      if (dx * dx + dy * dy > r * r) continue;
      ++rep.nodes;
      double nx = disk.cx + dx, ny = disk.cy + dy;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& [px, py] : xy) {
        double d2 = (px - nx) * (px - nx) + (py - ny) * (py - ny);
        best = std::min(best, d2);
      }
      double gap = std::sqrt(best);
      rep.worst_gap = std::max(rep.worst_gap, gap);
      if (!(gap <= h * (1.0 + 1e-12))) {
        rep.covered = false;
        ++rep.uncovered_nodes;
      }
    }
  }
  return rep;
}

}  // namespace gasket::sumset
