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

#include <gtest/gtest.h>

#include "concordia/correspondence.hpp"
#include "concordia/search.hpp"

namespace concordia {
namespace {

Point pt(const Curve& c, const char* x, const char* y) { return c.point(parse_rational(x), parse_rational(y)); }

TEST(Quadric, NormalizationAndValidation) {
  Curve c(-1, 3);
  QuadricPoint s(c, -16, 16, 0, 32);
  EXPECT_EQ(s.str(), "(1,-1,0,-2)");
  EXPECT_FALSE(s.is_trivial());
  EXPECT_TRUE(QuadricPoint(c, 1, 0, 1, 1).is_trivial());
  EXPECT_THROW(QuadricPoint(c, 1, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(QuadricPoint(c, 0, 0, 0, 0), std::invalid_argument);
  QuadricPoint r(c, std::array<Rational, 4>{make_rational(1, 2), make_rational(-1, 2), 0, -1});
  EXPECT_EQ(r, s);
}

TEST(Phi, Examples) {
  Curve c(-1, 3);
  EXPECT_EQ(phi(QuadricPoint(c, 1, -1, 0, -2), c), pt(c, "-1", "2"));
  EXPECT_TRUE(phi(QuadricPoint(c, 1, 0, 1, 1), c).is_infinity());
  EXPECT_EQ(phi(QuadricPoint(c, 1, 0, -1, -1), c), pt(c, "0", "0"));
}

TEST(Psi, Examples) {
  Curve c(-1, 3);
  EXPECT_EQ(psi(pt(c, "-1", "2"), c), QuadricPoint(c, 1, -1, 0, -2));
  EXPECT_EQ(psi(Point::infinity(), c), QuadricPoint(c, 1, 0, 1, 1));
  auto s = psi(pt(c, "3", "6"), c);
  EXPECT_FALSE(s.is_trivial());
  EXPECT_EQ(s[2], 0);
}

TEST(Isomorphism, RoundTripsOnTorsionAndSearchHits) {
  for (const Curve& c : {Curve(-1, 3), Curve(-5, 5), Curve(-6, 6), Curve(-5, 27), Curve(2, 7), Curve(-81, 175)}) {
    auto pool = torsion_oracle(c);
    auto hits = bounded_point_search(c, 300);
    pool.insert(pool.end(), hits.begin(), hits.end());
    for (const auto& p : pool) {
      auto s = psi(p, c);
      EXPECT_EQ(phi(s, c), p) << c.str() << " " << p.str();
      EXPECT_EQ(psi(phi(s, c), c), s) << c.str() << " " << s.str();
      if (s.is_trivial()) continue;
      EXPECT_EQ(sigma(s, c), negate(twice(p, c), c)) << c.str() << " " << p.str();
      if (c.m() == -c.n()) {
        EXPECT_EQ(tau(s, c), twice(p, c)) << c.str() << " " << p.str();
      }
    }
  }
}

TEST(SquareMaps, ConventionsAndErrors) {
  Curve c(-5, 5);
  EXPECT_TRUE(tau(QuadricPoint(c, 1, 0, 1, 1), c).is_infinity());
  EXPECT_TRUE(sigma(QuadricPoint(c, 1, 0, 1, 1), c).is_infinity());
  Curve g(-1, 3);
  EXPECT_THROW(tau(QuadricPoint(g, 1, 1, 0, 2), g), std::invalid_argument);
}

TEST(Triples, FAndG) {
  EXPECT_EQ(f(CongruentTriple(1, 2, 1)), ConcordantTriple(1, 3, 1));
  EXPECT_EQ(f(CongruentTriple(0, 1, 7)), ConcordantTriple(1, 1, 7));
  EXPECT_EQ(f(CongruentTriple(1, 3, 5)), ConcordantTriple(1, 2, 10));
  EXPECT_EQ(g(ConcordantTriple(1, 3, 1)), CongruentTriple(1, 2, 1));
  EXPECT_EQ(congruent_curve(CongruentTriple(1, 2, 1)).str(), "E(-1,3)");
  EXPECT_EQ(congruent_curve(CongruentTriple(0, 1, 5)).str(), "E(-5,5)");
}

TEST(Triples, Validation) {
  EXPECT_THROW(CongruentTriple(2, 4, 1), std::invalid_argument);
  EXPECT_THROW(CongruentTriple(3, 3, 1), std::invalid_argument);
  EXPECT_THROW(CongruentTriple(1, 2, 0), std::invalid_argument);
  EXPECT_THROW(ConcordantTriple(2, 4, 1), std::invalid_argument);
  EXPECT_THROW(ConcordantTriple(0, 1, 1), std::invalid_argument);
}

TEST(Triples, BijectionSmallRange) {
  for (int s = 1; s <= 20; ++s) {
    for (int r = -s + 1; r < s; ++r) {
      if (std::gcd(r, s) != 1) continue;
      for (int k = 1; k <= 6; ++k) {
        CongruentTriple t(r, s, k);
        EXPECT_EQ(g(f(t)), t);
        EXPECT_EQ(f(g(f(t))), f(t));
      }
    }
  }
}

TEST(Progressions, FromQuadricAndBack) {
  Curve c(-1, 3);
  auto ap = quadric_to_ap(QuadricPoint(c, 1, -1, 0, -2), 1, 3, 1);
  EXPECT_EQ(ap, APTriple(0, 1, 2, 1, 3, 1));
  EXPECT_TRUE(ap.contains_zero());
  EXPECT_EQ(ap_to_quadric(ap), QuadricPoint(c, 1, 1, 0, 2));
  EXPECT_THROW(quadric_to_ap(QuadricPoint(c, 1, 0, 1, 1), 1, 3, 1), std::invalid_argument);
  EXPECT_THROW(APTriple(1, 1, 2, 1, 3, 1), std::invalid_argument);
}

TEST(Triangles, FromProgressions) {
  auto tri = ap_to_triangle(APTriple(0, 1, 2, 1, 3, 1), 1, 2);
  EXPECT_EQ(tri.sorted_sides(), (std::array<Rational, 3>{2, 2, 2}));
  EXPECT_EQ(tri.k(), 1);
  EXPECT_THROW(ap_to_triangle(APTriple(0, 1, 2, 1, 3, 1), 0, 1), std::invalid_argument);

  Triangle right(3, 4, 5, 0, 1);
  auto ap = triangle_to_ap(right);
  EXPECT_EQ(ap, APTriple(make_rational(1, 2), make_rational(5, 2), make_rational(7, 2), 1, 1, 6));
  EXPECT_EQ(right.k(), 6);
  EXPECT_EQ(ap_to_triangle(ap).sorted_sides(), right.sorted_sides());
}

TEST(Triangles, Validation) {
  EXPECT_THROW(Triangle(3, 0, 3, 1, 2), std::invalid_argument);
  EXPECT_THROW(Triangle(1, 2, 3, 1, 2), std::invalid_argument);
  EXPECT_THROW(Triangle(3, 4, 6, 0, 1), std::invalid_argument);
  EXPECT_THROW(Triangle(2, 2, 2, 2, 4), std::invalid_argument);
}

TEST(Isosceles, Construction) {
  auto a = isosceles_triangle(1, 2);
  EXPECT_EQ(a.triangle.sorted_sides(), (std::array<Rational, 3>{2, 2, 2}));
  EXPECT_EQ(std::make_tuple(a.r, a.s, a.k), std::make_tuple(Integer(1), Integer(2), Integer(1)));
  auto b = isosceles_triangle(1, 3);
  EXPECT_EQ(b.triangle.sorted_sides(), (std::array<Rational, 3>{4, 6, 6}));
  EXPECT_EQ(std::make_tuple(b.r, b.s, b.k), std::make_tuple(Integer(7), Integer(9), Integer(2)));
  auto c = isosceles_triangle(3, 4);
  EXPECT_EQ(c.triangle.sorted_sides(), (std::array<Rational, 3>{4, 4, 6}));
  EXPECT_EQ(std::make_tuple(c.r, c.s, c.k), std::make_tuple(Integer(-1), Integer(8), Integer(1)));
  EXPECT_EQ(c.triangle.k(), 1);
  EXPECT_THROW(isosceles_triangle(2, 4), std::invalid_argument);
  EXPECT_THROW(isosceles_triangle(3, 3), std::invalid_argument);
}

TEST(Chains, TorsionPointOfMinusOneThree) {
  ConcordantTriple t(1, 3, 1);
  auto ch = chain_from_point(pt(t.curve(), "3", "6"), t);
  ASSERT_TRUE(ch.ap && ch.triangle);
  EXPECT_TRUE(ch.ap->contains_zero());
  EXPECT_TRUE(ch.triangle->isosceles());
  auto trivial = chain_from_point(pt(t.curve(), "1", "0"), t);
  EXPECT_FALSE(trivial.ap.has_value());
  EXPECT_FALSE(trivial.reason.empty());
}

}  // namespace
}  // namespace concordia
