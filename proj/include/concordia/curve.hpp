// Copyright 2026 The Concordia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact group law on E(m,n): y^2 = x(x+m)(x+n), in affine coordinates with
// an explicit point at infinity.

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "concordia/number.hpp"

namespace concordia {

class Curve;

class Point {
 public:
  static Point infinity() { return Point(); }

  bool is_infinity() const { return !affine_.has_value(); }
  const Rational& x() const { return affine().first; }
  const Rational& y() const { return affine().second; }

  friend bool operator==(const Point& a, const Point& b) { return a.affine_ == b.affine_; }

  // Infinity first, then x numerator, x denominator, y.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity()) return b.is_infinity() <=> a.is_infinity();
    if (auto c = cmp3(a.x().get_num(), b.x().get_num()); c != 0) return c;
    if (auto c = cmp3(a.x().get_den(), b.x().get_den()); c != 0) return c;
    return cmp3(a.y(), b.y());
  }

  std::string str() const {
    if (is_infinity()) return "O";
    return "(" + to_string(x()) + ", " + to_string(y()) + ")";
  }

 private:
  friend class Curve;
  Point() = default;
  Point(Rational x, Rational y) : affine_(std::in_place, std::move(x), std::move(y)) {}

  const std::pair<Rational, Rational>& affine() const {
    if (!affine_) throw std::logic_error("point at infinity has no affine coordinates");
    return *affine_;
  }

  template <class T>
  static std::strong_ordering cmp3(const T& a, const T& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::optional<std::pair<Rational, Rational>> affine_;
};

// Validated parameters (m, n) of E(m,n); m != n and both nonzero.
class Curve {
 public:
  Curve(Integer m, Integer n) : m_(std::move(m)), n_(std::move(n)) {
    if (m_ == 0 || n_ == 0) throw std::invalid_argument("E(m,n) needs nonzero m and n");
    if (m_ == n_) throw std::invalid_argument("E(m,n) needs m != n (the cubic would be singular)");
  }

  const Integer& m() const { return m_; }
  const Integer& n() const { return n_; }
  Integer a2() const { return m_ + n_; }
  Integer a4() const { return m_ * n_; }

  // m < 0 < n
  bool oriented() const { return m_ < 0 && n_ > 0; }

  // disc(x(x+m)(x+n)) = (m n (m-n))^2
  Integer discriminant_root() const { return abs(Integer(m_ * n_ * (m_ - n_))); }

  Rational rhs(const Rational& x) const { return x * (x + m_) * (x + n_); }

  bool contains(const Rational& x, const Rational& y) const { return y * y == rhs(x); }

  Point point(Rational x, Rational y) const {
    if (!contains(x, y)) {
      throw std::invalid_argument("(" + to_string(x) + ", " + to_string(y) + ") is not on " + str());
    }
    return Point(std::move(x), std::move(y));
  }

  std::array<Point, 3> two_torsion() const {
    return {Point(Rational(0), Rational(0)), Point(Rational(-m_), Rational(0)), Point(Rational(-n_), Rational(0))};
  }

  std::string str() const { return "E(" + to_string(m_) + "," + to_string(n_) + ")"; }

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Integer m_, n_;
};

inline Curve make_curve(const Integer& m, const Integer& n) { return Curve(m, n); }

inline bool on_curve(const Point& p, const Curve& c) { return p.is_infinity() || c.contains(p.x(), p.y()); }

inline Point negate(const Point& p, const Curve& c) {
  if (p.is_infinity()) return p;
  return c.point(p.x(), -p.y());
}

inline Point add(const Point& p, const Point& q, const Curve& c) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rational slope;
  if (p.x() == q.x()) {
    if (p.y() + q.y() == 0) return Point::infinity();
    slope = (3 * p.x() * p.x() + 2 * c.a2() * p.x() + c.a4()) / (2 * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = slope * slope - c.a2() - p.x() - q.x();
  Rational y3 = slope * (p.x() - x3) - p.y();
  return c.point(std::move(x3), std::move(y3));
}

inline Point twice(const Point& p, const Curve& c) { return add(p, p, c); }

inline Point multiply(const Point& p, const Integer& t, const Curve& c) {
  if (t < 0) return multiply(negate(p, c), Integer(-t), c);
  Point acc = Point::infinity();
  Point base = p;
  Integer k = t;
  while (k > 0) {
    if (is_odd(k)) acc = add(acc, base, c);
    k >>= 1;
    if (k > 0) base = twice(base, c);
  }
  return acc;
}

// nullopt means infinite order.
using PointOrder = std::optional<unsigned>;

inline constexpr unsigned kMaxTorsionOrder = 12;

inline std::string to_string(const PointOrder& o) { return o ? std::to_string(*o) : std::string("infinite"); }

inline PointOrder order_of(const Point& p, const Curve& c) {
  if (p.is_infinity()) return 1u;
  // Nagell-Lutz: every torsion multiple is integral.
  Point r = p;
  for (unsigned k = 1; k <= kMaxTorsionOrder; ++k) {
    if (r.is_infinity()) return k;
    if (!is_integral(r.x()) || !is_integral(r.y())) return std::nullopt;
    r = add(r, p, c);
  }
  return std::nullopt;
}

// Full 2-torsion descent: (x,y) in 2E(Q) iff x, x+m, x+n are all squares.
inline bool is_double(const Point& p, const Curve& c) {
  if (p.is_infinity()) return true;
  return is_square(p.x()) && is_square(p.x() + c.m()) && is_square(p.x() + c.n());
}

// All Q with 2Q = P (four of them when P is a double, since E(Q)[2] is full).
inline std::vector<Point> halve(const Point& p, const Curve& c) {
  std::vector<Point> out;
  if (p.is_infinity()) {
    out.push_back(Point::infinity());
    for (const auto& t : c.two_torsion()) out.push_back(t);
    return out;
  }
  auto r0 = exact_sqrt(p.x());
  auto r1 = exact_sqrt(Rational(p.x() + c.m()));
  auto r2 = exact_sqrt(Rational(p.x() + c.n()));
  if (!r0 || !r1 || !r2) return out;
  for (int signs = 0; signs < 8; ++signs) {
    Rational a = (signs & 1) ? Rational(-*r0) : *r0;
    Rational b = (signs & 2) ? Rational(-*r1) : *r1;
    Rational d = (signs & 4) ? Rational(-*r2) : *r2;
    Rational x0 = p.x() + a * b + a * d + b * d;
    auto y0 = exact_sqrt(c.rhs(x0));
    if (!y0) continue;
    for (const Rational& y : {*y0, Rational(-*y0)}) {
      Point q = c.point(x0, y);
      if (twice(q, c) == p && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// (x,y) -> (d^2 x, d^3 y): E(m,n) -> E(m d^2, n d^2).
inline Point rescale(const Point& p, const Integer& d, const Curve& target) {
  if (p.is_infinity()) return p;
  Integer d2 = d * d;
  return target.point(p.x() * d2, p.y() * d2 * d);
}

// E(m,n) with m = -p k d^2, n = q k d^2, gcd(p,q) = 1, k squarefree.
struct NormalizedParams {
  Integer p, q, k, d;

  Curve reduced_curve() const { return Curve(Integer(-p * k), Integer(q * k)); }
  Curve curve() const { return Curve(Integer(-p * k * d * d), Integer(q * k * d * d)); }
  friend bool operator==(const NormalizedParams&, const NormalizedParams&) = default;
};

inline NormalizedParams normalize_params(const Integer& m, const Integer& n) {
  if (!(m < 0 && n > 0)) throw std::invalid_argument("normalize_params requires m < 0 < n");
  Integer g = gcd(m, n);
  auto split = squarefree_split(g);
  return NormalizedParams{Integer(-m / g), Integer(n / g), split.squarefree, split.root};
}

// Every E(m,n) is a translate of an oriented E(m',n') with m' < 0 < n':
// shifting x by the middle 2-torsion root e gives x' = x - e.
struct Orientation {
  Curve oriented;
  Integer shift;  // x_original = x_oriented + shift

  Point to_oriented(const Point& p) const {
    if (p.is_infinity()) return p;
    return oriented.point(p.x() - shift, p.y());
  }
  Point from_oriented(const Point& p, const Curve& original) const {
    if (p.is_infinity()) return p;
    return original.point(p.x() + shift, p.y());
  }
};

inline Orientation orient(const Curve& c) {
  std::array<Integer, 3> roots{Integer(0), Integer(-c.m()), Integer(-c.n())};
  std::sort(roots.begin(), roots.end());
  const Integer& e = roots[1];
  return Orientation{Curve(Integer(e - roots[2]), Integer(e - roots[0])), e};
}

inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

inline void sort_points(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace concordia
