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

#include "concordia/problems.hpp"
#include "concordia/serialize.hpp"

namespace concordia {
namespace {

TEST(SolveConcordant, TorsionSolutionsOfOneThreeOne) {
  auto rep = solve_concordant(ConcordantTriple(1, 3, 1));
  EXPECT_FALSE(rep.searched);
  ASSERT_EQ(rep.solutions.size(), 4u);
  Curve c(-1, 3);
  bool found = false;
  for (const auto& s : rep.solutions) {
    EXPECT_EQ(s.order, 4u);
    EXPECT_EQ(s.provenance, Provenance::torsion);
    found = found || s.chain.quadric == QuadricPoint(c, 1, 1, 0, 2);
  }
  EXPECT_TRUE(found);
}

TEST(SolveConcordant, NoSolutionsForOne) {
  auto rep = solve_concordant(ConcordantTriple(1, 1, 1), Integer(100));
  EXPECT_TRUE(rep.searched);
  EXPECT_TRUE(rep.solutions.empty());
  EXPECT_EQ(rep.decidability, "bounded");
}

TEST(SolveConcordant, CongruentNumberSix) {
  auto rep = solve_concordant(ConcordantTriple(1, 1, 6), Integer(50));
  ASSERT_FALSE(rep.solutions.empty());
  for (const auto& s : rep.solutions) {
    EXPECT_EQ(s.provenance, Provenance::search);
    const auto& q = s.chain.quadric;
    EXPECT_EQ(verify_concordant_solution(-6, 6, q[0], q[1], q[2], q[3]), Verdict::nontrivial);
  }
}

TEST(SolveTheta, EquilateralIsUnique) {
  auto rep = solve_theta_congruent(CongruentTriple(1, 2, 1), Integer(200));
  ASSERT_EQ(rep.triangles.size(), 1u);
  EXPECT_EQ(rep.triangles[0].triangle.sorted_sides(), (std::array<Rational, 3>{2, 2, 2}));
  EXPECT_EQ(rep.triangles[0].generators.size(), 4u);
}

TEST(SolveTheta, CongruentNumberFive) {
  auto rep = solve_theta_congruent(CongruentTriple(0, 1, 5), Integer(2000));
  ASSERT_FALSE(rep.triangles.empty());
  std::array<Rational, 3> classic{make_rational(3, 2), make_rational(20, 3), make_rational(41, 6)};
  bool found = false;
  for (const auto& tc : rep.triangles) {
    EXPECT_EQ(tc.triangle.k(), 5);
    EXPECT_EQ(tc.triangle.r, 0);
    found = found || tc.triangle.sorted_sides() == classic;
  }
  EXPECT_TRUE(found);
}

TEST(SolveTheta, NoneForOne) {
  auto rep = solve_theta_congruent(CongruentTriple(0, 1, 1), Integer(500));
  EXPECT_TRUE(rep.triangles.empty());
  EXPECT_TRUE(rep.solutions.empty());
}

TEST(Families, StatedParameters) {
  EXPECT_EQ(gen_order4_family(1, 2).curve.str(), "E(-1,3)");
  EXPECT_EQ(gen_order4_family(1, 3).curve.str(), "E(-1,8)");
  EXPECT_EQ(gen_order8_family(3, 4, 5).curve.str(), "E(-81,175)");
  EXPECT_EQ(gen_order8_family(8, 15, 17).curve.str(), "E(-4096,46529)");
  EXPECT_EQ(gen_order36_family(-1, 3).curve.str(), "E(-5,27)");
  EXPECT_EQ(gen_order36_family(-2, 5).curve.str(), "E(-64,125)");
  auto e = gen_order36_family(-5, 13);
  EXPECT_EQ(e.curve.str(), "E(-2625,6591)");
  EXPECT_EQ(e.concordant, ConcordantTriple(875, 2197, 3));
  auto f = gen_order36_family(-2, 7);
  EXPECT_EQ(f.curve.str(), "E(-96,1029)");
  EXPECT_EQ(f.concordant, ConcordantTriple(32, 343, 3));
}

TEST(Families, CongruentVariants) {
  auto a = gen_order4_family(1, 2);
  EXPECT_FALSE(a.congruent.scaled_by_four);
  EXPECT_EQ(a.congruent.triple, CongruentTriple(1, 2, 1));
  auto b = gen_order4_family(1, 3);
  EXPECT_TRUE(b.congruent.scaled_by_four);
  EXPECT_EQ(b.congruent.curve.str(), "E(-4,32)");
  EXPECT_EQ(b.congruent.triple, CongruentTriple(7, 9, 2));
  auto c = gen_order4_family(2, 3);
  EXPECT_EQ(c.curve.str(), "E(-4,5)");
  EXPECT_EQ(c.congruent.curve.str(), "E(-16,20)");
  EXPECT_TRUE(contains_group(classify_torsion(c.congruent.curve).group, TorsionGroup::Z2xZ4));
}

TEST(Families, RejectInvalidParameters) {
  EXPECT_THROW(gen_order4_family(2, 4), std::invalid_argument);
  EXPECT_THROW(gen_order4_family(3, 2), std::invalid_argument);
  EXPECT_THROW(gen_order8_family(3, 4, 6), std::invalid_argument);
  EXPECT_THROW(gen_order36_family(1, 3), std::invalid_argument);
  EXPECT_THROW(gen_order36_family(-3, 1), std::invalid_argument);
}

TEST(Verify, Verdicts) {
  EXPECT_EQ(verify_concordant_solution(1, 4, 0, 1, 1, 2), Verdict::nontrivial);
  EXPECT_EQ(verify_concordant_solution(-1, 3, 1, 0, 1, 1), Verdict::trivial);
  EXPECT_EQ(verify_concordant_solution(-1, 3, 1, 1, 1, 1), Verdict::invalid);
  EXPECT_EQ(verify_concordant_solution(-1, 3, 0, 0, 0, 0), Verdict::invalid);
}

TEST(Verify, KSquaredSuite) {
  std::vector<Integer> ks;
  for (int k : {2, 3, 4, 5, 6, 8, 9, 13}) ks.emplace_back(k);
  for (const auto& e : im_counterexample_suite(ks)) {
    EXPECT_TRUE(e.ok) << "k=" << e.k << " " << e.error;
    Curve c(1, Integer(e.k * e.k));
    EXPECT_EQ(*e.image, c.point(Rational(e.k), Rational(-e.k * (e.k + 1))));
  }
}

TEST(Serialize, StableEncoding) {
  auto rep = solve_concordant(ConcordantTriple(1, 3, 1));
  EXPECT_EQ(to_json(rep).dump(), to_json(solve_concordant(ConcordantTriple(1, 3, 1))).dump());
  EXPECT_EQ(to_json(Integer("123456789012345678901234567890", 10)), Json("123456789012345678901234567890"));
  EXPECT_EQ(to_json(Integer(-7)), Json(-7));
  EXPECT_EQ(to_json(Point::infinity()), Json("O"));
  Curve c(-5, 5);
  Point p = c.point(make_rational(25, 4), make_rational(75, 8));
  EXPECT_EQ(to_json(p).dump(), R"(["25/4","75/8"])");
  EXPECT_EQ(point_from_json(to_json(p), c), p);
  EXPECT_THROW(point_from_json(Json::array({"1", "1"}), c), std::invalid_argument);
  auto tc = classify_torsion(Curve(-81, 175));
  auto cert = certificate_from_json(certificate_json(tc.group, tc.certificate));
  EXPECT_EQ(std::get<EightTorsionCert>(cert).zeta, 5);
}

}  // namespace
}  // namespace concordia
