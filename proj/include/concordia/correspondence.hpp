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

// Maps between the four encodings of one object:
//
//   point on E(m,n)  <->  point on Q(m,n): X0^2 + m X1^2 = X2^2, X0^2 + n X1^2 = X3^2
//                    <->  three rational squares alpha^2 < beta^2 < gamma^2 in
//                         arithmetic progression (m = -pk, n = qk)
//                    <->  rational triangle with angle theta, cos theta = r/s
//
// plus the triple bijections f: (r,s,k) -> (p,q,k') and g = f^{-1}.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "concordia/curve.hpp"

namespace concordia {

// Primitive integer projective point on Q(m,n), first nonzero coordinate
// positive.
class QuadricPoint {
 public:
  using Coords = std::array<Integer, 4>;

  // Scales any nonzero rational 4-tuple to the primitive representative.
  static Coords normalize(const std::array<Rational, 4>& v) {
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
    Coords out;
    Integer g = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      out[i] = Integer(v[i] * den);
      g = gcd(g, out[i]);
    }
    if (g == 0) throw std::invalid_argument("(0,0,0,0) is not a projective point");
    for (auto& x : out) x /= g;
    auto lead = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
    if (*lead < 0) {
      for (auto& x : out) x = -x;
    }
    return out;
  }

  static bool satisfies(const Coords& x, const Integer& m, const Integer& n) {
    return x[0] * x[0] + m * x[1] * x[1] == x[2] * x[2] && x[0] * x[0] + n * x[1] * x[1] == x[3] * x[3];
  }

  QuadricPoint(const Curve& c, const std::array<Rational, 4>& v) : x_(normalize(v)) {
    if (!satisfies(x_, c.m(), c.n())) throw std::invalid_argument(str() + " is not on Q" + c.str().substr(1));
  }
  QuadricPoint(const Curve& c, const Integer& x0, const Integer& x1, const Integer& x2, const Integer& x3)
      : QuadricPoint(c, std::array<Rational, 4>{Rational(x0), Rational(x1), Rational(x2), Rational(x3)}) {}

  const Integer& operator[](std::size_t i) const { return x_[i]; }
  const Coords& coords() const { return x_; }

  bool is_trivial() const { return x_[1] == 0; }

  std::string str() const {
    return "(" + to_string(x_[0]) + "," + to_string(x_[1]) + "," + to_string(x_[2]) + "," + to_string(x_[3]) + ")";
  }

  friend bool operator==(const QuadricPoint&, const QuadricPoint&) = default;

 private:
  Coords x_;
};

// Q(m,n) -> E(m,n), (X0,X1,X2,X3) -> (T,X,Y) =
//   (n X2 - m X3 + (m-n) X0,  mn (X3 - X2),  mn (m-n) X1)
// with (1,0,1,1) sent to infinity.
inline Point phi(const QuadricPoint& s, const Curve& c) {
  const Integer& m = c.m();
  const Integer& n = c.n();
  Integer t = n * s[2] - m * s[3] + (m - n) * s[0];
  Integer x = m * n * (s[3] - s[2]);
  Integer y = m * n * (m - n) * s[1];
  if (t == 0) {
    if (x != 0) throw std::logic_error("phi: T = 0 away from the base point on " + s.str());
    return Point::infinity();
  }
  return c.point(make_rational(x, t), make_rational(y, t));
}

// E(m,n) -> Q(m,n); infinity and the 2-torsion go to the trivial points
// (1,0,+-1,+-1) with signs chosen so phi(psi(P)) = P.
inline QuadricPoint psi(const Point& p, const Curve& c) {
  const Integer& m = c.m();
  const Integer& n = c.n();
  if (p.is_infinity()) return QuadricPoint(c, 1, 0, 1, 1);
  if (p.y() == 0) {
    if (p.x() == 0) return QuadricPoint(c, 1, 0, -1, -1);
    if (p.x() == -m) return QuadricPoint(c, 1, 0, -1, 1);
    if (p.x() == -n) return QuadricPoint(c, 1, 0, 1, -1);
    throw std::logic_error("psi: unexpected point with y = 0");
  }
  const Rational& x = p.x();
  const Rational& y = p.y();
  const Rational xm = x + m;
  const Rational xn = x + n;
  const Rational y2 = y * y;
  return QuadricPoint(c, std::array<Rational, 4>{
                             Rational(-xm * (y2 - m * xn * xn)),
                             Rational(2 * y * xn * xm),
                             Rational(-xm * (y2 + m * xn * xn)),
                             Rational(-xn * (y2 + n * xm * xm)),
                         });
}

namespace detail {
inline Point square_map(const QuadricPoint& s, const Curve& c, int sign) {
  if (s.is_trivial()) return Point::infinity();
  Rational x1(s[1]);
  Rational x = Rational(s[0] * s[0]) / (x1 * x1);
  Rational y = Rational(s[0] * s[2] * s[3]) / (x1 * x1 * x1);
  return c.point(x, sign < 0 ? Rational(-y) : y);
}
}  // namespace detail

// Degree-4 map Q(-n,n) -> E(-n,n): (X0^2/X1^2, -X0 X2 X3 / X1^3). Equals 2 phi.
inline Point tau(const QuadricPoint& s, const Curve& c) {
  if (c.m() != -c.n()) throw std::invalid_argument("tau is defined on Q(-n,n) only");
  return detail::square_map(s, c, -1);
}

// Degree-4 map Q(m,n) -> E(m,n): (X0^2/X1^2, X0 X2 X3 / X1^3). Equals -2 phi.
inline Point sigma(const QuadricPoint& s, const Curve& c) { return detail::square_map(s, c, +1); }

// Concordant-form triple: forms X^2 - pk Y^2, X^2 + qk Y^2.
struct ConcordantTriple {
  Integer p, q, k;

  ConcordantTriple(Integer p_, Integer q_, Integer k_) : p(std::move(p_)), q(std::move(q_)), k(std::move(k_)) {
    if (p <= 0 || q <= 0 || k <= 0) throw std::invalid_argument("concordant triple needs p, q, k > 0");
    if (gcd(p, q) != 1) throw std::invalid_argument("concordant triple needs gcd(p,q) = 1");
  }

  Curve curve() const { return Curve(Integer(-p * k), Integer(q * k)); }
  std::string str() const { return "(" + to_string(p) + "," + to_string(q) + "," + to_string(k) + ")"; }
  friend bool operator==(const ConcordantTriple&, const ConcordantTriple&) = default;
};

// Generalized congruent-number triple: cos theta = r/s, area k sqrt(s^2 - r^2).
struct CongruentTriple {
  Integer r, s, k;

  CongruentTriple(Integer r_, Integer s_, Integer k_) : r(std::move(r_)), s(std::move(s_)), k(std::move(k_)) {
    if (s <= 0 || k <= 0) throw std::invalid_argument("congruent triple needs s, k > 0");
    if (gcd(r, s) != 1) throw std::invalid_argument("congruent triple needs gcd(r,s) = 1");
    if (abs(r) >= s) throw std::invalid_argument("congruent triple needs |r| < s");
  }

  std::string str() const { return "(" + to_string(r) + "," + to_string(s) + "," + to_string(k) + ")"; }
  friend bool operator==(const CongruentTriple&, const CongruentTriple&) = default;
};

inline ConcordantTriple f(const CongruentTriple& t) {
  if (is_odd(t.r) != is_odd(t.s)) return ConcordantTriple(Integer(t.s - t.r), Integer(t.s + t.r), t.k);
  return ConcordantTriple(Integer((t.s - t.r) / 2), Integer((t.s + t.r) / 2), Integer(2 * t.k));
}

inline CongruentTriple g(const ConcordantTriple& t) {
  if (is_odd(t.p) && is_odd(t.q)) return CongruentTriple(Integer((t.q - t.p) / 2), Integer((t.q + t.p) / 2), t.k);
  if (is_odd(t.k)) throw std::invalid_argument("g" + t.str() + ": p, q of mixed parity need even k");
  return CongruentTriple(Integer(t.q - t.p), Integer(t.q + t.p), Integer(t.k / 2));
}

// The curve attached to a congruent triple, E(-(s-r)k, (s+r)k) in both
// parity cases (built through f).
inline Curve congruent_curve(const CongruentTriple& t) { return f(t).curve(); }

// alpha^2 = beta^2 - pk, gamma^2 = beta^2 + qk; all three nonnegative.
struct APTriple {
  Rational alpha, beta, gamma;
  Integer p, q, k;

  APTriple(Rational a, Rational b, Rational c, Integer p_, Integer q_, Integer k_)
      : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)), p(std::move(p_)), q(std::move(q_)),
        k(std::move(k_)) {
    if (alpha < 0 || beta < 0 || gamma < 0) throw std::invalid_argument("AP terms must be nonnegative");
    if (p <= 0 || q <= 0 || k <= 0) throw std::invalid_argument("AP gaps and step must be positive");
    if (alpha * alpha != beta * beta - p * k || gamma * gamma != beta * beta + q * k) {
      throw std::invalid_argument("not a progression: " + str());
    }
  }

  bool contains_zero() const { return alpha == 0; }

  std::string str() const {
    return "(" + to_string(alpha) + ", " + to_string(beta) + ", " + to_string(gamma) + "; p=" + to_string(p) +
           ", q=" + to_string(q) + ", k=" + to_string(k) + ")";
  }
  friend bool operator==(const APTriple&, const APTriple&) = default;
};

inline APTriple quadric_to_ap(const QuadricPoint& s, const Integer& p, const Integer& q, const Integer& k) {
  if (s.is_trivial()) throw std::invalid_argument("trivial quadric point " + s.str() + " has no progression");
  if (!QuadricPoint::satisfies(s.coords(), Integer(-p * k), Integer(q * k))) {
    throw std::invalid_argument(s.str() + " is not on Q(-pk, qk)");
  }
  Rational x1(abs(s[1]));
  return APTriple(Rational(abs(s[2])) / x1, Rational(abs(s[0])) / x1, Rational(abs(s[3])) / x1, p, q, k);
}

inline APTriple quadric_to_ap(const QuadricPoint& s, const ConcordantTriple& t) { return quadric_to_ap(s, t.p, t.q, t.k); }

inline QuadricPoint ap_to_quadric(const APTriple& t) {
  Curve c(Integer(-t.p * t.k), Integer(t.q * t.k));
  return QuadricPoint(c, std::array<Rational, 4>{t.beta, Rational(1), t.alpha, t.gamma});
}

// Sides a, b enclose theta; c is opposite. cos theta = r/s.
struct Triangle {
  Rational a, b, c;
  Integer r, s;

  Triangle(Rational a_, Rational b_, Rational c_, Integer r_, Integer s_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), r(std::move(r_)), s(std::move(s_)) {
    if (a <= 0 || b <= 0 || c <= 0) throw std::invalid_argument("degenerate triangle: nonpositive side");
    if (!(a + b > c && a + c > b && b + c > a)) throw std::invalid_argument("degenerate triangle: " + str());
    if (s <= 0 || abs(r) >= s || gcd(r, s) != 1) throw std::invalid_argument("angle needs coprime |r| < s");
    if (c * c * s != (a * a + b * b) * s - 2 * a * b * r) {
      throw std::invalid_argument("law of cosines fails for " + str());
    }
  }

  // area = k sqrt(s^2 - r^2)  <=>  ab = 2ks
  Rational k() const { return a * b / (2 * s); }
  bool isosceles() const { return a == b; }

  // Sides ascending, for congruence comparison.
  std::array<Rational, 3> sorted_sides() const {
    std::array<Rational, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return v;
  }

  std::string str() const {
    return "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + "; cos=" + to_string(r) + "/" +
           to_string(s) + ")";
  }
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// cos theta = (q-p)/(q+p) in lowest terms.
inline std::pair<Integer, Integer> angle_for_gaps(const Integer& p, const Integer& q) {
  Rational cosine = make_rational(Integer(q - p), Integer(q + p));
  return {Integer(cosine.get_num()), Integer(cosine.get_den())};
}

inline Triangle ap_to_triangle(const APTriple& t, const Integer& r, const Integer& s) {
  auto [r0, s0] = angle_for_gaps(t.p, t.q);
  if (r0 != r || s0 != s) {
    throw std::invalid_argument("angle " + to_string(r) + "/" + to_string(s) + " does not match gaps of " + t.str());
  }
  return Triangle(t.gamma + t.alpha, t.gamma - t.alpha, 2 * t.beta, r, s);
}

inline Triangle ap_to_triangle(const APTriple& t) {
  auto [r, s] = angle_for_gaps(t.p, t.q);
  return ap_to_triangle(t, r, s);
}

inline APTriple triangle_to_ap(const Triangle& tri) {
  const Rational& big = tri.a >= tri.b ? tri.a : tri.b;
  const Rational& small = tri.a >= tri.b ? tri.b : tri.a;
  Rational alpha = (big - small) / 2;
  Rational beta = tri.c / 2;
  Rational gamma = (big + small) / 2;
  Rational lower = beta * beta - alpha * alpha;
  Rational upper = gamma * gamma - beta * beta;
  Rational ratio = lower / upper;
  Integer p = ratio.get_num();
  Integer q = ratio.get_den();
  Rational step = lower / p;
  if (!is_integral(step)) throw std::invalid_argument("triangle " + tri.str() + " gives a non-integral step");
  return APTriple(alpha, beta, gamma, p, q, Integer(step.get_num()));
}

struct IsoscelesSolution {
  Triangle triangle;
  Integer r, s, k;
};

// The isosceles theta-triangle with squarefree k when sin(theta/2) = rho/sigma.
inline IsoscelesSolution isosceles_triangle(const Integer& rho, const Integer& sig) {
  if (rho <= 0 || sig <= 0 || rho >= sig) throw std::invalid_argument("isosceles_triangle needs 0 < rho < sigma");
  if (gcd(rho, sig) != 1) throw std::invalid_argument("isosceles_triangle needs coprime rho, sigma");
  Rational cosine = 1 - 2 * Rational(rho * rho) / Rational(sig * sig);
  Integer r = cosine.get_num();
  Integer s = cosine.get_den();
  if (is_odd(sig)) {
    Rational side(2 * sig);
    return IsoscelesSolution{Triangle(side, side, Rational(4 * rho), r, s), r, s, Integer(2)};
  }
  Rational side(sig);
  return IsoscelesSolution{Triangle(side, side, Rational(2 * rho), r, s), r, s, Integer(1)};
}

struct Chain {
  QuadricPoint quadric;
  std::optional<APTriple> ap;
  std::optional<Triangle> triangle;
  std::string reason;  // why ap/triangle are absent
};

// psi(P) and, for nontrivial images, the progression and triangle under
// the triple t that defines the curve.
inline Chain chain_from_point(const Point& pt, const ConcordantTriple& t) {
  Curve c = t.curve();
  Chain ch{psi(pt, c), std::nullopt, std::nullopt, ""};
  if (ch.quadric.is_trivial()) {
    ch.reason = "trivial quadric point (degenerate triangle)";
    return ch;
  }
  ch.ap = quadric_to_ap(ch.quadric, t);
  try {
    ch.triangle = ap_to_triangle(*ch.ap);
  } catch (const std::invalid_argument& e) {
    ch.reason = e.what();
  }
  return ch;
}

}  // namespace concordia
