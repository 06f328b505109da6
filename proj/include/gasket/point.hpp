#pragma once

#include <string>
#include <utility>

#include "gasket/rational.hpp"

namespace gasket {

// Planar point with exact rational coordinates in the triangular basis
// {(1,0), (1/2, sqrt(3)/2)}. The Cartesian embedding of (u, w) is
// (u + w/2, w*sqrt(3)/2). Gasket-native points (cell vertices, dyadic side
// points) are dyadic in this basis; certificate corners may carry general
// rational coordinates.
//
// The basis makes three things exact with plain rational arithmetic:
//   squared distance   |p - q|^2 = du^2 + du*dw + dw^2
//   orientation        cross(a, b) = (a.u*b.w - a.w*b.u) * sqrt(3)/2
//   the corner maps    (p + v_i)/2
struct Point {
  Rat u;
  Rat w;

  Point() = default;
  Point(Rat u_, Rat w_) : u(u_), w(w_) {}

  friend Point operator+(const Point& a, const Point& b) {
    return {a.u + b.u, a.w + b.w};
  }
  friend Point operator-(const Point& a, const Point& b) {
    return {a.u - b.u, a.w - b.w};
  }
  friend Point operator*(const Rat& s, const Point& p) {
    return {s * p.u, s * p.w};
  }
  friend Point operator/(const Point& p, const Rat& s) {
    return {p.u / s, p.w / s};
  }

  friend bool operator==(const Point& a, const Point& b) {
    return a.u == b.u && a.w == b.w;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic on (u, w); used for canonical ordering and dedup.
  friend bool operator<(const Point& a, const Point& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.w < b.w;
  }

  bool is_dyadic() const { return u.is_dyadic() && w.is_dyadic(); }

  Rat cart_x() const { return u + w / Rat(2); }
  Quad3 cart_y() const { return Quad3::sqrt3(w / Rat(2)); }

  std::pair<double, double> to_xy() const {
    return {cart_x().to_double(), cart_y().to_double()};
  }

  std::string str() const { return "(" + u.str() + ", " + w.str() + ")"; }
};

// The three corners of the unit triangle in basis coordinates.
inline Point vertex1() { return {Rat(0), Rat(0)}; }
inline Point vertex2() { return {Rat(1), Rat(0)}; }
inline Point vertex3() { return {Rat(0), Rat(1)}; }

inline Point midpoint(const Point& a, const Point& b) {
  return (a + b) / Rat(2);
}

// |p - q|^2, exact. In this basis the Gram matrix is [[1, 1/2], [1/2, 1]].
inline Rat sq_dist(const Point& p, const Point& q) {
  Rat du = p.u - q.u;
  Rat dw = p.w - q.w;
  return du * du + du * dw + dw * dw;
}

// Sign of the cross product (b - a) x (c - a). Positive = counterclockwise.
// The true cross product is this rational times sqrt(3)/2 > 0.
inline Rat cross(const Point& a, const Point& b, const Point& c) {
  Rat u1 = b.u - a.u, w1 = b.w - a.w;
  Rat u2 = c.u - a.u, w2 = c.w - a.w;
  return u1 * w2 - w1 * u2;
}

inline int orient(const Point& a, const Point& b, const Point& c) {
  return cross(a, b, c).sign();
}

}  // namespace gasket
