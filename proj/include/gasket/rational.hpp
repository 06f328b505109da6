#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

#include "gasket/errors.hpp"

namespace gasket {

// Exact rational arithmetic on an int64 numerator/denominator pair.
//
// Every quantity in this project is tiny: coordinates are dyadics at level
// <= 12, radii have denominators <= 32, sums involve at most a handful of
// terms. Intermediates are computed in __int128 and the reduced result is
// checked to fit back into int64; an in-domain computation never trips the
// check, and a pathological one throws instead of overflowing silently.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    __int128 nn = n, dd = d;
    if (dd < 0) {
      nn = -nn;
      dd = -dd;
    }
    assign_reduced(nn, dd);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  // Denominator is a power of two (includes integers).
  bool is_dyadic() const { return (den_ & (den_ - 1)) == 0; }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from_wide(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from_wide(n, d);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from_wide((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return from_wide((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  // Exact comparison; cross products of int64 always fit in __int128.
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Every finite double is a dyadic rational; the conversion is exact or
  // throws when the value needs more than 63 bits of numerator.
  static Rat from_double_exact(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite value");
    if (x == 0.0) return Rat(0);
    int e = 0;
    double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
    for (int i = 0; i < 63 && m != std::floor(m); ++i) {
      m *= 2.0;
      --e;
    }
    if (m != std::floor(m)) throw DomainError("double needs >63 mantissa bits");
    Rat r(static_cast<std::int64_t>(m));
    while (e > 0) {
      r = r * Rat(2);
      --e;
    }
    while (e < 0) {
      r = r / Rat(2);
      ++e;
    }
    return r;
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  static Rat from_wide(__int128 n, __int128 d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Rat r;
    r.assign_reduced(n, d);
    return r;
  }

  void assign_reduced(__int128 n, __int128 d) {
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (d == 0) {
      // n == 0 && d == 0 cannot happen: callers ensure d != 0.
      throw InvariantError("reduced denominator is zero");
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw OverflowError("rational out of int64 range");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    if (num_ == 0) den_ = 1;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_;
  std::int64_t den_;  // > 0, coprime with num_
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

// 2^k as a rational, k may be negative.
inline Rat pow2(int k) {
  if (k >= 0) {
    if (k > 62) throw OverflowError("2^k exceeds int64");
    return Rat(std::int64_t(1) << k);
  }
  if (k < -62) throw OverflowError("2^k denominator exceeds int64");
  return Rat(1, std::int64_t(1) << (-k));
}

// Exact square root of a rational if it is a perfect square.
inline std::optional<Rat> sqrt_exact(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    for (std::int64_t c = s > 1 ? s - 1 : 0; c <= s + 1; ++c)
      if (c * c == v) return c;
    return std::nullopt;
  };
  auto n = isqrt(r.num());
  if (!n) return std::nullopt;
  auto d = isqrt(r.den());
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

// An element a + b*sqrt(3) of the quadratic field Q(sqrt 3). Closed under
// +,-,* and division by rationals, which covers everything the gasket needs:
// Cartesian y-coordinates, triangle areas, perpendicular distances and
// inradii all live here when the inputs are basis-rational.
class Quad3 {
 public:
  Quad3() = default;
  Quad3(Rat rational) : a_(rational) {}
  Quad3(Rat rational, Rat sqrt3_coeff) : a_(rational), b_(sqrt3_coeff) {}

  static Quad3 sqrt3(Rat coeff = Rat(1)) { return Quad3(Rat(0), coeff); }

  const Rat& rational() const { return a_; }
  const Rat& sqrt3_coeff() const { return b_; }

  bool is_rational() const { return b_.is_zero(); }

  friend Quad3 operator+(const Quad3& x, const Quad3& y) {
    return Quad3(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend Quad3 operator-(const Quad3& x, const Quad3& y) {
    return Quad3(x.a_ - y.a_, x.b_ - y.b_);
  }
  Quad3 operator-() const { return Quad3(-a_, -b_); }
  friend Quad3 operator*(const Quad3& x, const Quad3& y) {
    // (a + b s)(c + d s) = ac + 3bd + (ad + bc) s  with s = sqrt 3.
    return Quad3(x.a_ * y.a_ + Rat(3) * x.b_ * y.b_,
                 x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend Quad3 operator*(const Rat& r, const Quad3& x) {
    return Quad3(r * x.a_, r * x.b_);
  }
  friend Quad3 operator/(const Quad3& x, const Rat& r) {
    return Quad3(x.a_ / r, x.b_ / r);
  }

  friend bool operator==(const Quad3& x, const Quad3& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;  // 1, sqrt3 independent over Q
  }
  friend bool operator!=(const Quad3& x, const Quad3& y) { return !(x == y); }

  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: compare a^2 with 3 b^2.
    Rat d = a_ * a_ - Rat(3) * b_ * b_;
    return d.sign() == 0 ? 0 : d.sign() * sa;
  }

  friend bool operator<(const Quad3& x, const Quad3& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Quad3& x, const Quad3& y) { return y < x; }
  friend bool operator<=(const Quad3& x, const Quad3& y) { return !(y < x); }
  friend bool operator>=(const Quad3& x, const Quad3& y) { return !(x < y); }

  double to_double() const {
    static const double kSqrt3 = std::sqrt(3.0);
    return a_.to_double() + b_.to_double() * kSqrt3;
  }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = b_.str() + "*sqrt(3)";
    if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? "+" : "") + s;
    return s;
  }

 private:
  Rat a_;  // rational part
  Rat b_;  // coefficient of sqrt(3)
};

inline Quad3 abs(const Quad3& q) { return q.sign() < 0 ? -q : q; }

}  // namespace gasket
