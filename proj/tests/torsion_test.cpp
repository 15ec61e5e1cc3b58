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

#include "concordia/search.hpp"
#include "concordia/torsion.hpp"

namespace concordia {
namespace {

Point pt(const Curve& c, const char* x, const char* y) { return c.point(parse_rational(x), parse_rational(y)); }

bool contains(const std::vector<Point>& v, const Point& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

TEST(Classify, FamilyRepresentatives) {
  auto a = classify_torsion(Curve(-1, 3));
  EXPECT_EQ(a.group, TorsionGroup::Z2xZ4);
  EXPECT_EQ(std::get<FourTorsionCert>(a.certificate).u, 1);
  EXPECT_EQ(std::get<FourTorsionCert>(a.certificate).v, 2);

  auto b = classify_torsion(Curve(-81, 175));
  EXPECT_EQ(b.group, TorsionGroup::Z2xZ8);
  const auto& c8 = std::get<EightTorsionCert>(b.certificate);
  EXPECT_EQ(std::make_tuple(c8.xi, c8.eta, c8.zeta), std::make_tuple(Integer(3), Integer(4), Integer(5)));

  auto c = classify_torsion(Curve(-5, 27));
  EXPECT_EQ(c.group, TorsionGroup::Z2xZ6);
  const auto& c6 = std::get<SixTorsionCert>(c.certificate);
  EXPECT_EQ(std::make_pair(c6.a, c6.b), std::make_pair(Integer(-1), Integer(3)));

  EXPECT_EQ(classify_torsion(Curve(-2, 3)).group, TorsionGroup::Z2xZ2);
}

TEST(Classify, NonReducedAndNonOrientedInputs) {
  // d = 2 over E(-5,27)
  auto t = classify_torsion(Curve(-20, 108));
  EXPECT_EQ(t.group, TorsionGroup::Z2xZ6);
  EXPECT_EQ(t.frame.d, 2);
  // swapped, all-positive and all-negative parameters go through the orientation step
  for (const Curve& c : {Curve(3, -1), Curve(1, 4), Curve(-3, -4), Curve(81, -94)}) {
    auto ts = torsion_subgroup(c);
    EXPECT_EQ(ts.points, torsion_oracle(c)) << c.str();
  }
}

TEST(Classify, KConstraint) {
  auto check = [](const Curve& c) {
    auto t = classify_torsion(c);
    return check_k_constraint(t.normalized, t.group);
  };
  EXPECT_TRUE(check(Curve(-1, 3)));
  EXPECT_TRUE(check(Curve(-2625, 6591)));
  EXPECT_EQ(classify_torsion(Curve(-2625, 6591)).normalized.k, 3);
  EXPECT_TRUE(check(Curve(-5, 27)));
  NormalizedParams fake{1, 3, 2, 1};
  EXPECT_FALSE(check_k_constraint(fake, TorsionGroup::Z2xZ4));
  EXPECT_FALSE(check_k_constraint(NormalizedParams{1, 3, 5, 1}, TorsionGroup::Z2xZ6));
}

TEST(PointFormulas, FourTorsion) {
  Curve c(-1, 3);
  auto p = four_torsion_points(1, 2, c);
  EXPECT_EQ(p.size(), 4u);
  for (const auto& q : {pt(c, "-1", "2"), pt(c, "-1", "-2"), pt(c, "3", "6"), pt(c, "3", "-6")}) EXPECT_TRUE(contains(p, q));
  Curve c8(-81, 175);
  auto p8 = four_torsion_points(9, 16, c8);
  for (const auto& q : {pt(c8, "-63", "1008"), pt(c8, "-63", "-1008"), pt(c8, "225", "3600"), pt(c8, "225", "-3600")}) {
    EXPECT_TRUE(contains(p8, q));
  }
  Curve e(-1, 8);
  auto pe = four_torsion_points(1, 3, e);
  for (const auto& q : {pt(e, "-2", "6"), pt(e, "-2", "-6"), pt(e, "4", "12"), pt(e, "4", "-12")}) EXPECT_TRUE(contains(pe, q));
  EXPECT_THROW(four_torsion_points(1, 3, c), std::invalid_argument);
}

TEST(PointFormulas, EightTorsion) {
  Curve c(-81, 175);
  auto p = eight_torsion_points(3, 4, 5, c);
  EXPECT_EQ(p.size(), 8u);
  EXPECT_TRUE(contains(p, pt(c, "945", "30240")));
  EXPECT_TRUE(contains(p, pt(c, "105", "840")));
  auto four = four_torsion_points(9, 16, c);
  for (const auto& q : p) {
    EXPECT_EQ(order_of(q, c), 8u);
    EXPECT_TRUE(contains(four, twice(q, c)));
  }
  EXPECT_THROW(eight_torsion_points(3, 4, 6, c), std::invalid_argument);
}

TEST(PointFormulas, ThreeAndSixTorsion) {
  Curve c(-5, 27);
  auto t = three_six_torsion_points(-1, 3, c);
  EXPECT_TRUE(contains(t.order3, pt(c, "9", "36")));
  EXPECT_TRUE(contains(t.order3, pt(c, "9", "-36")));
  EXPECT_TRUE(contains(t.order6, pt(c, "-3", "24")));
  EXPECT_TRUE(contains(t.order6, pt(c, "-3", "-24")));
  for (const auto& q : t.order3) EXPECT_EQ(order_of(q, c), 3u);
  for (const auto& q : t.order6) EXPECT_EQ(order_of(q, c), 6u);
  Curve d(-64, 125);
  EXPECT_TRUE(contains(three_six_torsion_points(-2, 5, d).order3, pt(d, "100", "900")));
}

TEST(Subgroup, SizesAndOracleAgreement) {
  for (auto [m, n, size] : {std::tuple{-1, 3, 8}, {-81, 175, 16}, {-5, 27, 12}, {-2, 3, 4}, {-64, 125, 12},
                            {-4096, 46529, 16}, {-96, 1029, 12}, {-2625, 6591, 12}}) {
    Curve c(m, n);
    auto ts = torsion_subgroup(c);
    EXPECT_EQ(ts.points.size(), static_cast<std::size_t>(size)) << c.str();
    EXPECT_EQ(ts.points, torsion_oracle(c)) << c.str();
    EXPECT_EQ(group_from_points(ts.points, c), ts.classification.group) << c.str();
  }
}

TEST(Certificates, CurveFromCertificate) {
  EXPECT_EQ(curve_from(FourTorsionCert{1, 2}).str(), "E(-1,3)");
  EXPECT_EQ(curve_from(EightTorsionCert{3, 4, 5}).str(), "E(-81,175)");
  EXPECT_EQ(curve_from(SixTorsionCert{-1, 3}).str(), "E(-5,27)");
  EXPECT_EQ(parse_torsion_group("Z2xZ6"), TorsionGroup::Z2xZ6);
  EXPECT_THROW(parse_torsion_group("Z4"), std::invalid_argument);
  EXPECT_TRUE(contains_group(TorsionGroup::Z2xZ8, TorsionGroup::Z2xZ4));
  EXPECT_FALSE(contains_group(TorsionGroup::Z2xZ6, TorsionGroup::Z2xZ4));
}

}  // namespace
}  // namespace concordia
