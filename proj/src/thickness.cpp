#include "gasket/thickness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "gasket/errors.hpp"

namespace gasket::thickness {

geom::Triangle corner_triangle(int i, const Rat& r) {
  if (r < Rat(1, 2) || r > Rat(1))
    throw DomainError("normalized range violated: r must be in [1/2, 1]");
  Point v;
  Point d1, d2;  // the two other corners relative to v_i
  switch (i) {
    case 1:
      v = vertex1();
      d1 = vertex2();
      d2 = vertex3();
      break;
    case 2:
      v = vertex2();
      d1 = vertex1();
      d2 = vertex3();
      break;
    case 3:
      v = vertex3();
      d1 = vertex1();
      d2 = vertex2();
      break;
    default:
      throw DomainError("corner index must be 1..3");
  }
  return geom::Triangle(v, v + r * (d1 - v), v + r * (d2 - v));
}

std::pair<int, geom::Triangle> local_triangle_normalized(const Point& x,
                                                         const Rat& r) {
  auto words = locate_cells(x, 1);
  if (words.empty()) throw DomainError("point not in gasket stage 1");
  int i = words.front().letter(0);  // smallest index containing x
  geom::Triangle q = corner_triangle(i, r);

  // The paper guarantees both conditions; check them exactly anyway.
  Rat r2 = r * r;
  for (const Point& v : q.vertices()) {
    if (sq_dist(v, x) > r2)
      throw InvariantError("corner triangle vertex escapes B(x, r)");
    if (!witness_on_cell(Word(), v))
      throw InvariantError("corner triangle vertex misses the boundary");
  }
  return {i, q};
}

namespace {

// Smallest n >= 0 with 2^(n+1) r >= 1; then 2^n r lies in [1/2, 1] for
// r <= 1. At the dyadic ties r = 2^-(n+1) this picks the smaller n.
int scale_for_radius(const Rat& r) {
  int n = 0;
  Rat doubled = Rat(2) * r;
  while (doubled < Rat(1)) {
    doubled = Rat(2) * doubled;
    ++n;
    if (n > 62) throw ResourceError("radius below exact resolution");
  }
  return n;
}

}  // namespace

Certificate local_triangle(const WitnessedPoint& x, const Rat& r) {
  if (r.sign() <= 0 || r > Rat(1))
    throw DomainError("radius must lie in (0, 1]");
  if (!witness_holds(x.p, x.witness))
    throw DomainError("membership witness does not match the query point");

  int n = scale_for_radius(r);
  auto words = locate_cells(x.p, n, /*level_cap=*/63);
  if (words.empty())
    throw InvariantError("witnessed point escapes stage " + std::to_string(n));
  Word w = words.front();

  Point xp = apply_word_inv(w, x.p);
  Rat rp = pow2(n) * r;
  auto [i, qn] = local_triangle_normalized(xp, rp);

  // Map the corner triangle forward; affine maps preserve vertex order and
  // orientation, and each vertex inherits its side location in the cell.
  std::array<Point, 3> mapped{};
  std::array<MembershipWitness, 3> witnesses{};
  auto nverts = qn.vertices();
  for (int k = 0; k < 3; ++k) {
    auto base = witness_on_cell(Word(), nverts[k]);
    if (!base)
      throw InvariantError("normalized vertex carries no side witness");
    mapped[k] = apply_word(w, nverts[k]);
    witnesses[k] =
        MembershipWitness{base->kind, w, base->side_index, base->t};
  }

  geom::Triangle q(mapped[0], mapped[1], mapped[2]);
  Certificate cert{
      x,
      r,
      n,
      w,
      i,
      rp,
      xp,
      q,
      witnesses,
      (mapped[0] + mapped[1] + mapped[2]) / Rat(3),
      geom::equilateral_incircle_radius(r),
  };
  verify_certificate(cert);
  return cert;
}

void verify_certificate(const Certificate& cert) {
  if (cert.word.size() != cert.scale)
    throw InvariantError("certificate word length differs from scale");
  if (cert.normalized_radius != pow2(cert.scale) * cert.radius ||
      cert.normalized_radius < Rat(1, 2) || cert.normalized_radius > Rat(1))
    throw InvariantError("certificate normalized radius out of range");

  Rat r2 = cert.radius * cert.radius;
  auto verts = cert.triangle.vertices();
  for (const Rat& s : cert.triangle.sq_sides())
    if (s != r2) throw InvariantError("certificate side differs from r");
  for (int k = 0; k < 3; ++k) {
    if (sq_dist(verts[k], cert.query.p) > r2)
      throw InvariantError("certificate vertex escapes B(x, r)");
    const auto& wit = cert.vertex_witnesses[k];
    if (wit.word != cert.word || !witness_holds(verts[k], wit))
      throw InvariantError("certificate vertex witness invalid");
  }

  if (cert.incircle_radius != geom::equilateral_incircle_radius(cert.radius))
    throw InvariantError("certificate incircle radius mismatch");
  if (geom::point_in_triangle(cert.incircle_center, cert.triangle) !=
      geom::Location::Inside)
    throw InvariantError("certificate incircle center not interior");
  // Equilateral triangle: the centroid is equidistant from all three sides
  // at exactly the inradius, so the incircle is contained in Q.
  for (const Quad3& d : geom::side_distances(cert.incircle_center,
                                             cert.triangle))
    if (d != cert.incircle_radius)
      throw InvariantError("incircle is not tangent to all three sides");
}

geom::Disk certificate_disk(const Certificate& cert) {
  geom::Disk d;
  auto [cx, cy] = cert.incircle_center.to_xy();
  d.cx = cx;
  d.cy = cy;
  d.radius = cert.incircle_radius.to_double();
  d.exact_center = cert.incircle_center;
  d.exact_radius = cert.incircle_radius;
  return d;
}

UpperBoundWitness upper_bound_witness() {
  return {vertex1(), Rat(1), geom::equilateral_incircle_radius(Rat(1))};
}

WitnessReport witness_report(int sample_level, int level_cap) {
  UpperBoundWitness ub = upper_bound_witness();
  auto sample = vertex_sample(sample_level, level_cap);
  std::vector<Point> inside;
  inside.reserve(sample.size());
  Rat r2 = ub.r * ub.r;
  for (const Point& p : sample)
    if (sq_dist(p, ub.x) <= r2) inside.push_back(p);
  auto hull = geom::convex_hull(inside);
  auto disk = geom::inscribed_disk(hull);
  bool match = disk.exact_radius && *disk.exact_radius == ub.inradius;
  return {ub, disk, hull.verts.size(), match};
}

// ---------------------------------------------------------------------------
// Brute-force estimator on the scaled integer lattice.
// ---------------------------------------------------------------------------

SampleGrid SampleGrid::build(int level, int level_cap) {
  auto sample = vertex_sample(level, level_cap);
  SampleGrid g;
  g.level = level;
  g.pts.reserve(sample.size());
  std::int64_t den = std::int64_t{1} << level;
  for (const Point& p : sample) {
    // level-n sample coordinates have denominators dividing 2^n
    g.pts.emplace_back(p.u.num() * (den / p.u.den()),
                       p.w.num() * (den / p.w.den()));
  }
  return g;  // sample is sorted by (u, w); the scaling preserves that
}

namespace {

using LatticePoint = std::pair<std::int64_t, std::int64_t>;

__int128 lattice_cross(const LatticePoint& o, const LatticePoint& a,
                       const LatticePoint& b) {
  return (__int128)(a.first - o.first) * (b.second - o.second) -
         (__int128)(a.second - o.second) * (b.first - o.first);
}

// Monotone chain over pre-sorted unique lattice points.
std::vector<LatticePoint> lattice_hull(const std::vector<LatticePoint>& pts) {
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<LatticePoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && lattice_cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && lattice_cross(hull[k - 2], hull[k - 1], pts[i]) <= 0)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

EmpiricalInradius inradius_of_lattice_subset(
    const std::vector<LatticePoint>& subset, int level) {
  if (subset.size() < 3) return {0.0, true};
  auto hull = lattice_hull(subset);
  if (hull.size() < 3) return {0.0, true};
  const double den = static_cast<double>(std::int64_t{1} << level);
  static const double kHalfSqrt3 = 0.5 * std::sqrt(3.0);
  std::vector<std::pair<double, double>> xy;
  xy.reserve(hull.size());
  for (const auto& [u, w] : hull)
    xy.emplace_back((u + 0.5 * w) / den, w * kHalfSqrt3 / den);
  auto disk = geom::inscribed_disk_xy(xy);
  return {disk.radius, disk.degenerate};
}

}  // namespace

EmpiricalInradius empirical_inradius(const Point& x, const Rat& r,
                                     const SampleGrid& grid) {
  if (r.sign() <= 0) throw DomainError("radius must be positive");
  if (geom::point_in_triangle(
          x, geom::Triangle(vertex1(), vertex2(), vertex3())) ==
      geom::Location::Outside)
    throw DomainError("query point lies outside the base triangle");

  std::int64_t den = std::int64_t{1} << grid.level;
  std::vector<LatticePoint> subset;

  // r.den() stays small so rn^2 * den^2 fits comfortably in __int128.
  if (x.u.is_dyadic() && x.w.is_dyadic() && x.u.den() <= den &&
      x.w.den() <= den && r.den() <= (std::int64_t{1} << 20) &&
      r.num() <= (std::int64_t{1} << 20)) {
    // Exact integer filter: |p - x|^2 <= r^2 scaled by den^2 * r.den^2.
    std::int64_t xu = x.u.num() * (den / x.u.den());
    std::int64_t xw = x.w.num() * (den / x.w.den());
    __int128 rd2 = (__int128)r.den() * r.den();
    __int128 rhs = (__int128)r.num() * r.num() * den * den;
    for (const auto& [pu, pw] : grid.pts) {
      std::int64_t du = pu - xu, dw = pw - xw;
      std::int64_t s = du * du + du * dw + dw * dw;
      if (s * rd2 <= rhs) subset.emplace_back(pu, pw);
    }
  } else {
    // General rational query: exact filter in rational arithmetic.
    Rat r2 = r * r;
    Rat scale(1, den);
    for (const auto& [pu, pw] : grid.pts) {
      Point p{Rat(pu) * scale, Rat(pw) * scale};
      if (sq_dist(p, x) <= r2) subset.emplace_back(pu, pw);
    }
  }
  return inradius_of_lattice_subset(subset, grid.level);
}

EmpiricalInradius empirical_inradius(const Point& x, const Rat& r,
                                     int sample_level, int level_cap) {
  return empirical_inradius(x, r, SampleGrid::build(sample_level, level_cap));
}

std::vector<Rat> default_radii() {
  std::vector<Rat> radii;
  radii.reserve(32);
  for (int k = 1; k <= 32; ++k) radii.emplace_back(k, 32);
  return radii;
}

ThicknessReport thickness_scan(int sample_level, int query_level,
                               const std::vector<Rat>& radii, int threads,
                               int level_cap) {
  if (radii.empty()) throw DomainError("empty radii list");
  for (const Rat& r : radii)
    if (r.sign() <= 0 || r > Rat(1))
      throw DomainError("scan radii must lie in (0, 1]");

  auto queries = vertex_sample(query_level, level_cap);
  SampleGrid grid = SampleGrid::build(sample_level, level_cap);

  ThicknessReport report;
  report.exact_value = geom::equilateral_incircle_radius(Rat(1));
  report.witness_upper = upper_bound_witness().inradius;
  report.sample_level = sample_level;
  report.query_level = query_level;
  report.radii = radii;
  report.entries.resize(queries.size() * radii.size());

  auto compute = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Point& q = queries[idx / radii.size()];
      const Rat& r = radii[idx % radii.size()];
      auto est = empirical_inradius(q, r, grid);
      report.entries[idx] = {q, r, est.value, est.degenerate};
    }
  };

  const std::size_t total = report.entries.size();
  int nthreads = std::clamp(threads, 1, 64);
  if (nthreads == 1 || total < 2) {
    compute(0, total);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (total + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      std::size_t begin = t * chunk;
      if (begin >= total) break;
      pool.emplace_back(compute, begin, std::min(total, begin + chunk));
    }
    for (auto& th : pool) th.join();
  }

  // Order-free reduction: every entry value is schedule-independent.
  report.numeric_lower = std::numeric_limits<double>::infinity();
  report.degenerate_count = 0;
  for (const auto& e : report.entries) {
    if (e.degenerate) {
      ++report.degenerate_count;
      continue;
    }
    report.numeric_lower =
        std::min(report.numeric_lower, e.inradius / e.r.to_double());
  }
  return report;
}

}  // namespace gasket::thickness
