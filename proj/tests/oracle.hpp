#pragma once

// Test-only oracles, independent of the library's solver paths.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "gasket/point.hpp"

namespace testoracle {

// Largest inscribed circle radius for a convex CCW polygon, by exhaustive
// support enumeration: the optimum of max rho s.t. n_e . c - rho >= o_e is
// attained at a point where three edge constraints are tight, so every edge
// triple yields one candidate (center, rho) from a 3x3 linear solve; the
// best candidate that is feasible against all edges is the answer. Entirely
// independent of the incremental LP it is used to check.
inline double brute_inradius_xy(
    const std::vector<std::pair<double, double>>& verts) {
  const std::size_t n = verts.size();
  if (n < 3) return 0.0;
  struct E {
    double nx, ny, off;  // inward distance of c is nx*cx + ny*cy - off
  };
  std::vector<E> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [x0, y0] = verts[i];
    auto [x1, y1] = verts[(i + 1) % n];
    double ex = x1 - x0, ey = y1 - y0;
    double len = std::hypot(ex, ey);
    if (len < 1e-30) continue;
    edges.push_back({-ey / len, ex / len, (-ey * x0 + ex * y0) / len});
  }
  const std::size_t m = edges.size();
  if (m < 3) return 0.0;

  auto feasible_radius = [&](double cx, double cy) {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& e : edges)
      r = std::min(r, e.nx * cx + e.ny * cy - e.off);
    return r;
  };

  double best = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        // Solve n.c - rho = off for the three chosen edges (Cramer).
        const E& a = edges[i];
        const E& b = edges[j];
        const E& c = edges[k];
        double det = a.nx * (b.ny * (-1) - (-1) * c.ny) -
                     a.ny * (b.nx * (-1) - (-1) * c.nx) +
                     (-1) * (b.nx * c.ny - b.ny * c.nx);
        if (std::abs(det) < 1e-14) continue;
        double dx = a.off * (b.ny * (-1) - (-1) * c.ny) -
                    a.ny * (b.off * (-1) - (-1) * c.off) +
                    (-1) * (b.off * c.ny - b.ny * c.off);
        double dy = a.nx * (b.off * (-1) - (-1) * c.off) -
                    a.off * (b.nx * (-1) - (-1) * c.nx) +
                    (-1) * (b.nx * c.off - b.off * c.nx);
        double cx = dx / det, cy = dy / det;
        best = std::max(best, feasible_radius(cx, cy));
      }
    }
  }
  return best;
}

inline double brute_inradius(const std::vector<gasket::Point>& verts) {
  std::vector<std::pair<double, double>> xy;
  xy.reserve(verts.size());
  for (const auto& p : verts) xy.push_back(p.to_xy());
  return brute_inradius_xy(xy);
}

}  // namespace testoracle
