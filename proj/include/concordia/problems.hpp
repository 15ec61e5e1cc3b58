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

// End-to-end pipelines for the concordant-form and theta-congruent problems,
// the torsion family generators, and solution verifiers.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "concordia/correspondence.hpp"
#include "concordia/search.hpp"
#include "concordia/torsion.hpp"

namespace concordia {

enum class Provenance { torsion, search };

inline std::string to_string(Provenance p) { return p == Provenance::torsion ? "torsion" : "search"; }

struct Solution {
  Point point;
  PointOrder order;
  Chain chain;
  Provenance provenance;
};

struct TriangleClass {
  Triangle triangle;
  std::vector<Point> generators;
};

struct SolutionReport {
  std::variant<ConcordantTriple, CongruentTriple> input;
  ConcordantTriple concordant;  // the triple whose curve was examined
  Curve curve;
  TorsionClass torsion;
  std::vector<Solution> solutions;
  std::vector<TriangleClass> triangles;  // theta-congruent problem only
  std::optional<Integer> search_bound;
  bool searched = false;
  // An empty solution list only ever means "none up to the bound".
  std::string decidability = "bounded";
};

namespace detail {

inline Solution make_solution(const Point& p, PointOrder order, const ConcordantTriple& t, Provenance prov) {
  Solution s{p, order, chain_from_point(p, t), prov};
  if (s.chain.quadric.is_trivial()) throw std::logic_error("point " + p.str() + " of order > 2 maps to a trivial solution");
  if (!(phi(s.chain.quadric, t.curve()) == p)) throw std::logic_error("phi(psi(P)) != P for " + p.str());
  return s;
}

}  // namespace detail

inline SolutionReport solve_concordant(const ConcordantTriple& t, const std::optional<Integer>& search_bound = std::nullopt,
                                       unsigned jobs = 1) {
  Curve c = t.curve();
  TorsionSubgroup ts = torsion_subgroup(c);
  SolutionReport rep{t, t, c, ts.classification, {}, {}, search_bound, false, "bounded"};
  for (const auto& p : ts.points) {
    auto o = order_of(p, c);
    if (o && *o <= 2) continue;
    rep.solutions.push_back(detail::make_solution(p, o, t, Provenance::torsion));
  }
  if (rep.solutions.empty() && search_bound) {
    rep.searched = true;
    for (const auto& p : bounded_point_search(c, *search_bound, jobs)) {
      auto o = order_of(p, c);
      if (o && *o <= 2) continue;
      rep.solutions.push_back(detail::make_solution(p, o, t, o ? Provenance::torsion : Provenance::search));
    }
  }
  return rep;
}

inline SolutionReport solve_theta_congruent(const CongruentTriple& t,
                                            const std::optional<Integer>& search_bound = std::nullopt,
                                            unsigned jobs = 1) {
  ConcordantTriple ct = f(t);
  SolutionReport rep = solve_concordant(ct, search_bound, jobs);
  rep.input = t;
  for (const auto& s : rep.solutions) {
    if (!s.chain.triangle) continue;
    const Triangle& tri = *s.chain.triangle;
    if (tri.r != t.r || tri.s != t.s || tri.k() != Rational(t.k)) {
      throw std::logic_error("triangle " + tri.str() + " does not realize " + t.str());
    }
    auto key = tri.sorted_sides();
    auto it = std::find_if(rep.triangles.begin(), rep.triangles.end(),
                           [&](const TriangleClass& tc) { return tc.triangle.sorted_sides() == key; });
    if (it == rep.triangles.end()) {
      rep.triangles.push_back(TriangleClass{tri, {s.point}});
    } else {
      it->generators.push_back(s.point);
    }
  }
  return rep;
}

enum class Family { order4, order8, order36 };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::order4: return "order4";
    case Family::order8: return "order8";
    case Family::order36: return "order36";
  }
  throw std::logic_error("bad Family");
}

// The theta-congruent reading of a family curve: either the curve itself
// (m, n both odd) or its rescaling E(4m, 4n).
struct CongruentVariant {
  Curve curve;
  ConcordantTriple concordant;
  CongruentTriple triple;
  bool scaled_by_four;
};

struct FamilyRecord {
  Family family;
  std::vector<std::pair<std::string, Integer>> params;
  Curve curve;
  TorsionGroup expected;
  ConcordantTriple concordant;
  CongruentVariant congruent;
};

namespace detail {

inline CongruentVariant congruent_variant(const Curve& c, const ConcordantTriple& t) {
  if (is_odd(c.m()) && is_odd(c.n())) return CongruentVariant{c, t, g(t), false};
  ConcordantTriple scaled(t.p, t.q, Integer(4 * t.k));
  return CongruentVariant{scaled.curve(), scaled, g(scaled), true};
}

}  // namespace detail

inline FamilyRecord gen_order4_family(const Integer& u, const Integer& v) {
  if (u <= 0 || u >= v || gcd(u, v) != 1) throw std::invalid_argument("order4 family needs coprime 0 < u < v");
  Curve c(Integer(-u * u), Integer(v * v - u * u));
  ConcordantTriple t(Integer(-c.m()), c.n(), Integer(1));
  return FamilyRecord{Family::order4, {{"u", u}, {"v", v}}, c, TorsionGroup::Z2xZ4, t, detail::congruent_variant(c, t)};
}

inline FamilyRecord gen_order8_family(const Integer& xi, const Integer& eta, const Integer& zeta) {
  if (xi <= 0 || xi >= eta || xi * xi + eta * eta != zeta * zeta || gcd(xi, eta) != 1) {
    throw std::invalid_argument("order8 family needs a primitive Pythagorean triple with xi < eta");
  }
  Integer x4 = pow(xi, 4);
  Curve c(Integer(-x4), Integer(pow(eta, 4) - x4));
  ConcordantTriple t(Integer(-c.m()), c.n(), Integer(1));
  return FamilyRecord{Family::order8,  {{"xi", xi}, {"eta", eta}, {"zeta", zeta}}, c, TorsionGroup::Z2xZ8, t,
                      detail::congruent_variant(c, t)};
}

inline FamilyRecord gen_order36_family(const Integer& a, const Integer& b) {
  if (!(a < 0 && b > 0 && a + 2 * b > 0 && 2 * a + b > 0 && a + b != 0) || gcd(a, b) != 1) {
    throw std::invalid_argument("order36 family needs coprime a < 0 < b with a+2b > 0, 2a+b > 0");
  }
  Curve c(Integer(a * a * a * (a + 2 * b)), Integer(b * b * b * (2 * a + b)));
  Integer common = gcd(Integer(a + 2 * b), Integer(2 * a + b));
  std::optional<ConcordantTriple> t;
  if (common == 1) {
    t.emplace(Integer(-c.m()), c.n(), Integer(1));
  } else if (common == 3) {
    t.emplace(Integer(-c.m() / 3), Integer(c.n() / 3), Integer(3));
  } else {
    throw std::logic_error("gcd(a+2b, 2a+b) not in {1,3}");
  }
  return FamilyRecord{Family::order36, {{"a", a}, {"b", b}}, c, TorsionGroup::Z2xZ6, *t,
                      detail::congruent_variant(c, *t)};
}

enum class Verdict { trivial, nontrivial, invalid };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::trivial: return "trivial";
    case Verdict::nontrivial: return "nontrivial";
    case Verdict::invalid: return "invalid";
  }
  throw std::logic_error("bad Verdict");
}

// X^2 + m Y^2 = Z^2 and X^2 + n Y^2 = W^2; nontrivial iff Y != 0.
inline Verdict verify_concordant_solution(const Integer& m, const Integer& n, const Integer& x, const Integer& y,
                                          const Integer& z, const Integer& w) {
  if (x == 0 && y == 0 && z == 0 && w == 0) return Verdict::invalid;
  if (x * x + m * y * y != z * z || x * x + n * y * y != w * w) return Verdict::invalid;
  return y == 0 ? Verdict::trivial : Verdict::nontrivial;
}

struct ImEntry {
  Integer k;
  std::optional<Verdict> verdict;
  std::optional<Point> image;
  PointOrder order;
  std::string error;
  bool ok = false;
};

// (0,1,1,k) on Q(1,k^2) and its image under phi, expected of order 4.
inline std::vector<ImEntry> im_counterexample_suite(const std::vector<Integer>& k_values) {
  std::vector<ImEntry> out;
  for (const auto& k : k_values) {
    ImEntry e{k, std::nullopt, std::nullopt, std::nullopt, "", false};
    try {
      Curve c(Integer(1), Integer(k * k));
      e.verdict = verify_concordant_solution(c.m(), c.n(), 0, 1, 1, k);
      QuadricPoint s(c, 0, 1, 1, k);
      e.image = phi(s, c);
      e.order = order_of(*e.image, c);
      e.ok = e.verdict == Verdict::nontrivial && e.order == 4u;
    } catch (const std::invalid_argument& ex) {
      e.error = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace concordia
