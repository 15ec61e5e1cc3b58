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

// Invariant suites runnable at the command line (`concordia selftest`).

#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "concordia/problems.hpp"

namespace concordia {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  // classification and oracle disagreed (as opposed to a plain invariant failure)
  bool inconsistency = false;

  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() == 20) failures.push_back("...");
  }
};

struct OracleGrid {
  int max_pq = 30;
  std::vector<int> ks{1, 2, 3, 5, 6, 7, 10, 15};
};

inline std::vector<Curve> oracle_grid_curves(const OracleGrid& grid) {
  std::vector<Curve> out;
  for (int p = 1; p <= grid.max_pq; ++p) {
    for (int q = 1; q <= grid.max_pq; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (int k : grid.ks) out.emplace_back(Integer(-p * k), Integer(q * k));
    }
  }
  return out;
}

// Closed-form torsion against the Nagell-Lutz oracle, point set for point set.
inline SuiteResult oracle_equivalence_suite(const OracleGrid& grid, unsigned jobs) {
  SuiteResult res{"oracle-equivalence"};
  const auto curves = oracle_grid_curves(grid);
  std::mutex mu;
  parallel_for(curves.size(), jobs, [&](std::size_t i) {
    const Curve& c = curves[i];
    std::string problem;
    try {
      auto ts = torsion_subgroup(c);
      auto oracle = torsion_oracle(c);
      if (ts.points != oracle) {
        problem = c.str() + ": closed form " + to_string(ts.classification.group) + " (" +
                  std::to_string(ts.points.size()) + " points) vs oracle " + std::to_string(oracle.size()) + " points";
      } else if (group_from_points(oracle, c) != ts.classification.group) {
        problem = c.str() + ": group type implied by oracle orders differs";
      } else if (!check_k_constraint(ts.classification.normalized, ts.classification.group)) {
        problem = c.str() + ": k-constraint violated";
      }
    } catch (const std::exception& e) {
      problem = c.str() + ": " + e.what();
    }
    std::lock_guard lock(mu);
    res.expect(problem.empty(), problem);
  });
  res.inconsistency = !res.passed();
  return res;
}

inline std::vector<Curve> sample_curves() {
  return {Curve(-1, 3),  Curve(-5, 5),   Curve(-6, 6),  Curve(-5, 27),  Curve(-81, 175), Curve(-2, 3),
          Curve(-1, 8),  Curve(-64, 125), Curve(-3, 10), Curve(2, 7),    Curve(-20, 108), Curve(1, 4),
          Curve(-7, 7),  Curve(-4, 5)};
}

inline SuiteResult group_law_suite() {
  SuiteResult res{"group-law"};
  for (const auto& c : sample_curves()) {
    auto pool = torsion_oracle(c);
    auto extra = bounded_point_search(c, Integer(60));
    for (std::size_t i = 0; i < extra.size() && i < 6; ++i) pool.push_back(extra[i]);
    for (const auto& p : pool) {
      res.expect(add(p, negate(p, c), c).is_infinity(), c.str() + ": P + (-P) != O for " + p.str());
      res.expect(is_double(twice(p, c), c), c.str() + ": 2P not detected as a double for " + p.str());
      for (const auto& q : pool) res.expect(add(p, q, c) == add(q, p, c), c.str() + ": P+Q != Q+P");
    }
    auto tors = torsion_oracle(c);
    for (const auto& p : tors) {
      for (const auto& q : tors) {
        for (const auto& r : tors) {
          res.expect(add(add(p, q, c), r, c) == add(p, add(q, r, c), c), c.str() + ": associativity fails");
        }
      }
    }
  }
  return res;
}

inline SuiteResult isomorphism_suite() {
  SuiteResult res{"isomorphisms"};
  for (const auto& c : sample_curves()) {
    auto pool = torsion_oracle(c);
    auto extra = bounded_point_search(c, Integer(200));
    pool.insert(pool.end(), extra.begin(), extra.end());
    sort_points(pool);
    for (const auto& p : pool) {
      auto s = psi(p, c);
      res.expect(phi(s, c) == p, c.str() + ": phi(psi(P)) != P for " + p.str());
      res.expect(psi(phi(s, c), c) == s, c.str() + ": psi(phi(S)) != S for " + s.str());
      if (s.is_trivial()) continue;
      res.expect(sigma(s, c) == negate(twice(p, c), c), c.str() + ": sigma != -2 phi at " + s.str());
      if (c.m() == -c.n()) res.expect(tau(s, c) == twice(p, c), c.str() + ": tau != 2 phi at " + s.str());
    }
  }
  return res;
}

inline SuiteResult bijection_suite(int max_s = 50, int max_k = 20) {
  SuiteResult res{"f-g-bijection"};
  for (int s = 1; s <= max_s; ++s) {
    for (int r = -s + 1; r < s; ++r) {
      if (std::gcd(r, s) != 1) continue;
      for (int k = 1; k <= max_k; ++k) {
        CongruentTriple t(r, s, k);
        auto ft = f(t);
        res.expect(g(ft) == t, "g(f" + t.str() + ") != id");
        res.expect(f(g(ft)) == ft, "f(g" + ft.str() + ") != id");
      }
    }
  }
  return res;
}

inline SuiteResult family_suite(int limit = 20) {
  SuiteResult res{"families"};
  auto check = [&](const FamilyRecord& fr) {
    auto tc = classify_torsion(fr.curve);
    res.expect(contains_group(tc.group, fr.expected), fr.curve.str() + ": expected " + to_string(fr.expected));
    auto tv = classify_torsion(fr.congruent.curve);
    res.expect(tv.group == tc.group, fr.congruent.curve.str() + ": congruent variant lost its torsion");
    const Integer& k = fr.concordant.k;
    const Integer& kc = fr.congruent.triple.k;
    if (fr.expected == TorsionGroup::Z2xZ6) {
      res.expect(k == 1 || k == 3, fr.curve.str() + ": concordant k not in {1,3}");
      res.expect(is_odd(kc) ? (kc == 1 || kc == 3) : (kc == 2 || kc == 6), fr.curve.str() + ": congruent k");
    } else {
      res.expect(k == 1, fr.curve.str() + ": concordant k != 1");
      res.expect(is_odd(kc) ? kc == 1 : kc == 2, fr.curve.str() + ": congruent k");
    }
  };
  for (int u = 1; u <= limit; ++u) {
    for (int v = u + 1; v <= limit; ++v) {
      if (std::gcd(u, v) == 1) check(gen_order4_family(u, v));
    }
  }
  for (int xi = 1; xi <= limit; ++xi) {
    for (int eta = xi + 1; eta <= limit; ++eta) {
      auto zeta = exact_sqrt(Integer(xi * xi + eta * eta));
      if (zeta && std::gcd(xi, eta) == 1) check(gen_order8_family(xi, eta, *zeta));
    }
  }
  for (int a = -1; a >= -limit; --a) {
    for (int b = 1; b <= limit; ++b) {
      if (std::gcd(a, b) == 1 && a + 2 * b > 0 && 2 * a + b > 0) check(gen_order36_family(a, b));
    }
  }
  return res;
}

inline SuiteResult im_suite() {
  SuiteResult res{"im-k-squared"};
  std::vector<Integer> ks;
  for (int k : {2, 3, 4, 5, 6, 8, 9, 13}) ks.emplace_back(k);
  for (const auto& e : im_counterexample_suite(ks)) {
    res.expect(e.ok, "k=" + to_string(e.k) + ": (0,1,1,k) check failed " + e.error);
  }
  return res;
}

inline std::vector<SuiteResult> run_selftest(bool deep, unsigned jobs) {
  std::vector<SuiteResult> out;
  out.push_back(group_law_suite());
  out.push_back(isomorphism_suite());
  out.push_back(bijection_suite());
  out.push_back(family_suite());
  out.push_back(im_suite());
  OracleGrid grid;
  if (!deep) grid = OracleGrid{8, {1, 2, 3, 5}};
  out.push_back(oracle_equivalence_suite(grid, jobs));
  return out;
}

}  // namespace concordia
