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

// Closed-form torsion of E(m,n). With the curve translated so that
// m < 0 < n and rescaled to m = -pk, n = qk (gcd(p,q) = 1, k squarefree):
//
//   Z2xZ4  iff  -m = u^2, n - m = v^2
//   Z2xZ8  iff  additionally u = xi^2, v = eta^2, xi^2 + eta^2 = zeta^2
//   Z2xZ6  iff  m = a^3 (a + 2b), n = b^3 (b + 2a) for coprime a, b
//   Z2xZ2  otherwise
//
// Points found on the reduced curve are carried back to the caller's curve
// by (x,y) -> (d^2 x + shift, d^3 y).

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "concordia/curve.hpp"

namespace concordia {

enum class TorsionGroup { Z2xZ2, Z2xZ4, Z2xZ6, Z2xZ8 };

inline std::string to_string(TorsionGroup g) {
  switch (g) {
    case TorsionGroup::Z2xZ2: return "Z2xZ2";
    case TorsionGroup::Z2xZ4: return "Z2xZ4";
    case TorsionGroup::Z2xZ6: return "Z2xZ6";
    case TorsionGroup::Z2xZ8: return "Z2xZ8";
  }
  throw std::logic_error("bad TorsionGroup");
}

inline TorsionGroup parse_torsion_group(const std::string& s) {
  for (auto g : {TorsionGroup::Z2xZ2, TorsionGroup::Z2xZ4, TorsionGroup::Z2xZ6, TorsionGroup::Z2xZ8}) {
    if (to_string(g) == s) return g;
  }
  throw std::invalid_argument("unknown torsion group '" + s + "'");
}

inline std::size_t group_order(TorsionGroup g) {
  switch (g) {
    case TorsionGroup::Z2xZ2: return 4;
    case TorsionGroup::Z2xZ4: return 8;
    case TorsionGroup::Z2xZ6: return 12;
    case TorsionGroup::Z2xZ8: return 16;
  }
  throw std::logic_error("bad TorsionGroup");
}

// Whether `small` embeds in `big`; among Z2xZ2N groups that is N | N'.
inline bool contains_group(TorsionGroup big, TorsionGroup small) { return group_order(big) % group_order(small) == 0; }

// -m = u^2, n = v^2 - u^2
struct FourTorsionCert {
  Integer u, v;
  friend bool operator==(const FourTorsionCert&, const FourTorsionCert&) = default;
};

// xi^2 + eta^2 = zeta^2, m = -xi^4, n = eta^4 - xi^4
struct EightTorsionCert {
  Integer xi, eta, zeta;
  friend bool operator==(const EightTorsionCert&, const EightTorsionCert&) = default;
};

// m = a^3 (a + 2b), n = b^3 (b + 2a); canonical representative has b > 0
struct SixTorsionCert {
  Integer a, b;
  friend bool operator==(const SixTorsionCert&, const SixTorsionCert&) = default;
};

using Certificate = std::variant<std::monostate, FourTorsionCert, EightTorsionCert, SixTorsionCert>;

// Where a certificate lives: the reduced oriented curve E(-pk, qk) and the
// map back to the classified curve.
struct TorsionFrame {
  Curve reduced;
  Integer d;
  Integer shift;

  Point to_original(const Point& p, const Curve& original) const {
    if (p.is_infinity()) return p;
    Integer d2 = d * d;
    return original.point(p.x() * d2 + shift, p.y() * d2 * d);
  }
};

struct TorsionClass {
  TorsionGroup group;
  Certificate certificate;
  TorsionFrame frame;
  NormalizedParams normalized;
};

inline Curve curve_from(const FourTorsionCert& c) { return Curve(Integer(-c.u * c.u), Integer(c.v * c.v - c.u * c.u)); }

inline Curve curve_from(const EightTorsionCert& c) {
  Integer x4 = pow(c.xi, 4);
  return Curve(Integer(-x4), Integer(pow(c.eta, 4) - x4));
}

inline Curve curve_from(const SixTorsionCert& c) {
  return Curve(Integer(c.a * c.a * c.a * (c.a + 2 * c.b)), Integer(c.b * c.b * c.b * (c.b + 2 * c.a)));
}

namespace detail {

inline void require_cert_curve(const Curve& expected, const Curve& c) {
  if (!(expected == c)) throw std::invalid_argument("certificate describes " + expected.str() + ", not " + c.str());
}

inline bool valid_six_torsion_pair(const Integer& a, const Integer& b) {
  return a != 0 && b != 0 && gcd(a, b) == 1 && a + 2 * b != 0 && b + 2 * a != 0 && a + b != 0 && a - b != 0;
}

// Signed a with a^3 | m and b = (m/a^3 - a)/2 integral and n = b^3 (b + 2a).
inline std::vector<SixTorsionCert> six_torsion_from_m(const Integer& m, const Integer& n) {
  std::vector<SixTorsionCert> out;
  for (const auto& pa : power_divisors(factorize(m), 3)) {
    for (const Integer& a : {pa, Integer(-pa)}) {
      Integer rest = m / (a * a * a) - a;
      if (is_odd(rest)) continue;
      Integer b = rest / 2;
      if (!valid_six_torsion_pair(a, b)) continue;
      if (b * b * b * (b + 2 * a) != n) continue;
      out.push_back(b > 0 ? SixTorsionCert{a, b} : SixTorsionCert{Integer(-a), Integer(-b)});
    }
  }
  return out;
}

// Mirror search through the cube divisors of n.
inline std::vector<SixTorsionCert> six_torsion_from_n(const Integer& m, const Integer& n) {
  std::vector<SixTorsionCert> out;
  for (const auto& pb : power_divisors(factorize(n), 3)) {
    for (const Integer& b : {pb, Integer(-pb)}) {
      Integer rest = n / (b * b * b) - b;
      if (is_odd(rest)) continue;
      Integer a = rest / 2;
      if (!valid_six_torsion_pair(a, b)) continue;
      if (a * a * a * (a + 2 * b) != m) continue;
      out.push_back(b > 0 ? SixTorsionCert{a, b} : SixTorsionCert{Integer(-a), Integer(-b)});
    }
  }
  return out;
}

template <class Cert>
void dedupe(std::vector<Cert>& v) {
  std::vector<Cert> u;
  for (auto& c : v) {
    if (std::find(u.begin(), u.end(), c) == u.end()) u.push_back(c);
  }
  v = std::move(u);
}

}  // namespace detail

// Classification of the reduced oriented curve itself (no frame mapping).
inline std::pair<TorsionGroup, Certificate> classify_reduced(const Curve& r) {
  const Integer& m = r.m();
  const Integer& n = r.n();
  auto u = exact_sqrt(Integer(-m));
  auto v = exact_sqrt(Integer(n - m));
  if (u && v) {
    auto xi = exact_sqrt(*u);
    auto eta = exact_sqrt(*v);
    if (xi && eta) {
      if (auto zeta = exact_sqrt(Integer(*xi * *xi + *eta * *eta))) {
        return {TorsionGroup::Z2xZ8, EightTorsionCert{*xi, *eta, *zeta}};
      }
    }
    return {TorsionGroup::Z2xZ4, FourTorsionCert{*u, *v}};
  }
  auto via_m = detail::six_torsion_from_m(m, n);
  auto via_n = detail::six_torsion_from_n(m, n);
  detail::dedupe(via_m);
  detail::dedupe(via_n);
  if (via_m != via_n) {
    throw std::logic_error("order-3 certificate search through m and through n disagree on " + r.str());
  }
  if (!via_m.empty()) return {TorsionGroup::Z2xZ6, via_m.front()};
  return {TorsionGroup::Z2xZ2, std::monostate{}};
}

inline TorsionClass classify_torsion(const Curve& c) {
  Orientation o = orient(c);
  NormalizedParams np = normalize_params(o.oriented.m(), o.oriented.n());
  Curve reduced = np.reduced_curve();
  auto [group, cert] = classify_reduced(reduced);
  return TorsionClass{group, std::move(cert), TorsionFrame{reduced, np.d, o.shift}, np};
}

// The four points of order 4 on E(-u^2, v^2 - u^2).
inline std::vector<Point> four_torsion_points(const Integer& u, const Integer& v, const Curve& c) {
  if (u <= 0 || v <= 0) throw std::invalid_argument("four_torsion_points needs u, v > 0");
  detail::require_cert_curve(curve_from(FourTorsionCert{u, v}), c);
  std::vector<Point> out;
  for (const Integer& x : {Integer(u * u - u * v), Integer(u * u + u * v)}) {
    Integer y = v * x;
    out.push_back(c.point(Rational(x), Rational(y)));
    out.push_back(c.point(Rational(x), Rational(-y)));
  }
  for (const auto& p : out) {
    if (order_of(p, c) != 4u) throw std::logic_error("4-torsion formula gave " + p.str() + " of order != 4");
  }
  sort_points(out);
  return out;
}

inline std::vector<Point> eight_torsion_points(const Integer& xi, const Integer& eta, const Integer& zeta,
                                               const Curve& c) {
  if (xi <= 0 || eta <= 0 || zeta <= 0 || xi * xi + eta * eta != zeta * zeta) {
    throw std::invalid_argument("eight_torsion_points needs positive xi^2 + eta^2 = zeta^2");
  }
  detail::require_cert_curve(curve_from(EightTorsionCert{xi, eta, zeta}), c);
  const Integer base = xi * eta * zeta;
  const Integer xz = xi * zeta;
  struct Row {
    Integer x, y;
  };
  const Row rows[] = {
      {xz * (xi + eta) * (zeta + eta), base * (xi + eta) * (zeta + xi) * (zeta + eta)},
      {xz * (xi + eta) * (zeta - eta), base * (xi + eta) * (zeta - xi) * (zeta - eta)},
      {xz * (xi - eta) * (zeta + eta), base * (xi - eta) * (zeta - xi) * (zeta + eta)},
      {xz * (xi - eta) * (zeta - eta), base * (xi - eta) * (zeta - eta) * (zeta + xi)},
  };
  const auto fours = four_torsion_points(Integer(xi * xi), Integer(eta * eta), c);
  std::vector<Point> out;
  for (const auto& row : rows) {
    out.push_back(c.point(Rational(row.x), Rational(row.y)));
    out.push_back(c.point(Rational(row.x), Rational(-row.y)));
  }
  for (const auto& p : out) {
    if (order_of(p, c) != 8u) throw std::logic_error("8-torsion formula gave " + p.str() + " of order != 8");
    if (std::find(fours.begin(), fours.end(), twice(p, c)) == fours.end()) {
      throw std::logic_error("double of " + p.str() + " is not a 4-torsion point");
    }
  }
  sort_points(out);
  return out;
}

struct ThreeSixTorsion {
  std::vector<Point> order3;
  std::vector<Point> order6;
};

inline ThreeSixTorsion three_six_torsion_points(const Integer& a, const Integer& b, const Curve& c) {
  if (!detail::valid_six_torsion_pair(a, b)) throw std::invalid_argument("invalid (a,b) for order-3 torsion");
  detail::require_cert_curve(curve_from(SixTorsionCert{a, b}), c);
  ThreeSixTorsion out;
  auto push_pair = [&](std::vector<Point>& dst, const Integer& x, const Integer& y) {
    dst.push_back(c.point(Rational(x), Rational(y)));
    dst.push_back(c.point(Rational(x), Rational(-y)));
  };
  const Integer a2b2 = a * a * b * b;
  const Integer apb2 = (a + b) * (a + b);
  const Integer amb = a * a - b * b;
  push_pair(out.order3, a2b2, Integer(a2b2 * apb2));

  const Integer x1 = -a * a * b * (b + 2 * a);
  const Integer x2 = -a * b * b * (a + 2 * b);
  const Integer x3 = a * b * (a + 2 * b) * (b + 2 * a);
  push_pair(out.order6, x1, Integer(-x1 * amb));
  push_pair(out.order6, x2, Integer(-x2 * amb));
  push_pair(out.order6, x3, Integer(x3 * apb2));

  for (const auto& p : out.order3) {
    if (order_of(p, c) != 3u) throw std::logic_error("3-torsion formula gave " + p.str() + " of order != 3");
  }
  for (const auto& p : out.order6) {
    if (order_of(p, c) != 6u) throw std::logic_error("6-torsion formula gave " + p.str() + " of order != 6");
  }
  sort_points(out.order3);
  sort_points(out.order6);
  return out;
}

// Trivial points plus every certificate-generated point, carried to c.
inline std::vector<Point> torsion_points(const TorsionClass& t, const Curve& c) {
  const Curve& r = t.frame.reduced;
  std::vector<Point> reduced_pts{Point::infinity()};
  for (const auto& p : r.two_torsion()) reduced_pts.push_back(p);
  auto append = [&](const std::vector<Point>& v) { reduced_pts.insert(reduced_pts.end(), v.begin(), v.end()); };
  if (auto* c4 = std::get_if<FourTorsionCert>(&t.certificate)) {
    append(four_torsion_points(c4->u, c4->v, r));
  } else if (auto* c8 = std::get_if<EightTorsionCert>(&t.certificate)) {
    append(four_torsion_points(Integer(c8->xi * c8->xi), Integer(c8->eta * c8->eta), r));
    append(eight_torsion_points(c8->xi, c8->eta, c8->zeta, r));
  } else if (auto* c6 = std::get_if<SixTorsionCert>(&t.certificate)) {
    auto ts = three_six_torsion_points(c6->a, c6->b, r);
    append(ts.order3);
    append(ts.order6);
  }
  std::vector<Point> out;
  out.reserve(reduced_pts.size());
  for (const auto& p : reduced_pts) out.push_back(t.frame.to_original(p, c));
  sort_points(out);
  if (out.size() != group_order(t.group)) throw std::logic_error("torsion point count mismatch on " + c.str());
  return out;
}

struct TorsionSubgroup {
  TorsionClass classification;
  std::vector<Point> points;
};

inline TorsionSubgroup torsion_subgroup(const Curve& c) {
  TorsionClass t = classify_torsion(c);
  auto pts = torsion_points(t, c);
  return TorsionSubgroup{std::move(t), std::move(pts)};
}

// Consistency of the torsion type with the squarefree part k of gcd(-m, n).
inline bool check_k_constraint(const NormalizedParams& nc, TorsionGroup t) {
  switch (t) {
    case TorsionGroup::Z2xZ4:
    case TorsionGroup::Z2xZ8: return nc.k == 1;
    case TorsionGroup::Z2xZ6: return nc.k == 1 || nc.k == 3;
    case TorsionGroup::Z2xZ2: return true;
  }
  return false;
}

// Group type implied by the orders of a full torsion point set.
inline std::optional<TorsionGroup> group_from_points(const std::vector<Point>& pts, const Curve& c) {
  unsigned max_order = 0;
  for (const auto& p : pts) {
    auto o = order_of(p, c);
    if (!o) return std::nullopt;
    max_order = std::max(max_order, *o);
  }
  if (pts.size() == 4 && max_order == 2) return TorsionGroup::Z2xZ2;
  if (pts.size() == 8 && max_order == 4) return TorsionGroup::Z2xZ4;
  if (pts.size() == 12 && max_order == 6) return TorsionGroup::Z2xZ6;
  if (pts.size() == 16 && max_order == 8) return TorsionGroup::Z2xZ8;
  return std::nullopt;
}

}  // namespace concordia
