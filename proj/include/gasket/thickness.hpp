#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "gasket/gasket.hpp"
#include "gasket/geom.hpp"

namespace gasket::thickness {

// Per-query proof object: an equilateral triangle Q of side exactly r whose
// vertices lie in E and within the closed disk B(x, r), together with its
// incircle of radius r*sqrt(3)/6. All invariants hold in exact arithmetic
// and are re-checked before a certificate is returned.
struct Certificate {
  WitnessedPoint query;  // x with its membership witness
  Rat radius;            // r in (0, 1]
  int scale;             // n with 2^n r in [1/2, 1]
  Word word;             // smallest length-n word with x in its cell
  int corner;            // chosen corner index in the normalized problem
  Rat normalized_radius;     // r' = 2^n r
  Point normalized_query;    // x' = phi_w^{-1}(x)
  geom::Triangle triangle;   // Q = phi_w(Q_corner(r'))
  std::array<MembershipWitness, 3> vertex_witnesses;  // per triangle vertex
  Point incircle_center;     // centroid of Q, exact
  Quad3 incircle_radius;     // r * sqrt(3)/6, exact
};

// Corner triangle Q_i(r): equilateral of side r sharing corner v_i with the
// level-1 cell T_i; contains T_i because r >= 1/2.
geom::Triangle corner_triangle(int i, const Rat& r);

// One-scale construction for r in [1/2, 1]: picks the smallest i with
// x in T_i and returns (i, Q_i(r)). Requires x in stage 1.
std::pair<int, geom::Triangle> local_triangle_normalized(const Point& x,
                                                         const Rat& r);

// Full construction for 0 < r <= 1: rescales to the normalized range through
// the smallest containing cell and maps the corner triangle back.
Certificate local_triangle(const WitnessedPoint& x, const Rat& r);

// Exact invariant check; throws InvariantError on violation.
void verify_certificate(const Certificate& cert);

// Incircle of the certificate triangle as a disk with exact center/radius.
geom::Disk certificate_disk(const Certificate& cert);

// The sharp upper-bound witness (v1, 1): the local hull there is the whole
// unit triangle, whose largest inscribed disk has radius sqrt(3)/6.
struct UpperBoundWitness {
  Point x;
  Rat r;
  Quad3 inradius;
};

UpperBoundWitness upper_bound_witness();

// Verification companion for the witness: hull the level-n sample inside
// B(v1, 1) and inscribe. The hull collapses to the unit triangle, so the
// disk comes back symbolically as sqrt(3)/6.
struct WitnessReport {
  UpperBoundWitness witness;
  geom::Disk hull_disk;
  std::size_t hull_vertices;
  bool symbolic_match;  // hull inradius == sqrt(3)/6 in exact form
};

WitnessReport witness_report(int sample_level = 8,
                             int level_cap = kDefaultLevelCap);

// Level-n sample scaled onto the integer lattice at denominator 2^n, sorted;
// shared by all brute-force queries at one level.
struct SampleGrid {
  int level;
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;

  static SampleGrid build(int level, int level_cap = kDefaultLevelCap);
};

struct EmpiricalInradius {
  double value;
  bool degenerate;  // filtered sample was empty or flat
};

// Brute-force inner estimate: inscribed disk of the hull of the sample points
// inside B(x, r). Exact filter and hull; the disk itself is the float LP.
// Always a lower bound for the true local hull inradius.
EmpiricalInradius empirical_inradius(const Point& x, const Rat& r,
                                     const SampleGrid& grid);
EmpiricalInradius empirical_inradius(const Point& x, const Rat& r,
                                     int sample_level,
                                     int level_cap = kDefaultLevelCap);

struct ScanEntry {
  Point x;
  Rat r;
  double inradius;
  bool degenerate;
};

struct ThicknessReport {
  Quad3 exact_value;    // sqrt(3)/6
  Quad3 witness_upper;  // inradius at (v1, 1)
  double numeric_lower;  // min over nondegenerate entries of inradius/r
  int sample_level;
  int query_level;
  std::vector<Rat> radii;
  std::vector<ScanEntry> entries;  // query-major, radius-minor order
  std::size_t degenerate_count;
};

// Grid scan over vertex_sample(query_level) x radii. Entries are independent
// and the min reduction is order-free, so the report is identical for any
// worker count.
ThicknessReport thickness_scan(int sample_level, int query_level,
                               const std::vector<Rat>& radii, int threads = 1,
                               int level_cap = kDefaultLevelCap);

// {k/32 : 1 <= k <= 32}
std::vector<Rat> default_radii();

}  // namespace gasket::thickness
