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

// Command-line front end. Exit codes: 0 success, 1 invalid arguments,
// 2 verification failed or invariant violated, 3 internal inconsistency
// (closed-form classification disagrees with the oracle).

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "concordia/selftest.hpp"
#include "concordia/serialize.hpp"

namespace concordia::cli {

enum ExitCode : int { kOk = 0, kBadArgs = 1, kVerifyFailed = 2, kInconsistent = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Search results memoized in one JSON file keyed "m,n,H".
class SearchCache {
 public:
  explicit SearchCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (in) {
      try {
        data_ = Json::parse(in);
      } catch (const Json::parse_error&) {
        data_ = Json::object();
      }
    }
    if (!data_.is_object()) data_ = Json::object();
  }

  static std::filesystem::path default_path() {
    if (const char* env = std::getenv("CONCORDIA_CACHE"); env && *env) return env;
    return "concordia-cache.json";
  }

  static std::string key(const Curve& c, const Integer& h) {
    return to_string(c.m()) + "," + to_string(c.n()) + "," + to_string(h);
  }

  std::optional<std::vector<Point>> get(const Curve& c, const Integer& h) const {
    auto it = data_.find(key(c, h));
    if (it == data_.end()) return std::nullopt;
    std::vector<Point> pts;
    for (const auto& j : *it) pts.push_back(point_from_json(j, c));
    return pts;
  }

  void put(const Curve& c, const Integer& h, const std::vector<Point>& pts) {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(to_json(p));
    data_[key(c, h)] = std::move(arr);
    auto tmp = path_;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << data_.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path_);
  }

 private:
  std::filesystem::path path_;
  Json data_ = Json::object();
};

namespace detail {

inline void write_text(std::ostream& out, const Json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto is_flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v) {
      if (e.is_structured()) return false;
    }
    return true;
  };
  auto flat = [&](const Json& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + ")";
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !is_flat(v)) {
        out << pad << k << ":\n";
        write_text(out, v, indent + 2);
      } else {
        out << pad << k << ": " << (is_flat(v) ? flat(v) : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_flat(v)) {
        out << pad << "- " << flat(v) << "\n";
      } else if (v.is_structured()) {
        out << pad << "-\n";
        write_text(out, v, indent + 2);
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

inline Integer arg(const std::string& name, const std::string& value) {
  try {
    return parse_integer(value);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": expected an integer, got '" + value + "'");
  }
}

inline Rational rational_arg(const std::string& name, const std::string& value) {
  try {
    return parse_rational(value);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": expected a rational, got '" + value + "'");
  }
}

inline std::optional<Integer> optional_arg(const std::string& name, const std::string& value) {
  if (value.empty()) return std::nullopt;
  return arg(name, value);
}

inline std::vector<Point> cached_search(const Curve& c, const Integer& h, unsigned jobs, bool use_cache) {
  if (!use_cache) return bounded_point_search(c, h, jobs);
  SearchCache cache(SearchCache::default_path());
  if (auto hit = cache.get(c, h)) return *hit;
  auto pts = bounded_point_search(c, h, jobs);
  cache.put(c, h, pts);
  return pts;
}

// Point -> quadric -> progression -> triangle, as far as the curve allows.
inline Json chain_json(const Point& p, const Curve& c) {
  Json j{{"curve", to_json(c)}, {"point", to_json(p)}, {"order", to_json(order_of(p, c))}};
  auto s = psi(p, c);
  j["quadric"] = to_json(s);
  if (c.oriented() && !s.is_trivial()) {
    Integer step = gcd(c.m(), c.n());
    ConcordantTriple t(Integer(-c.m() / step), Integer(c.n() / step), step);
    auto ch = chain_from_point(p, t);
    j["ap"] = to_json(*ch.ap);
    j["triangle"] = ch.triangle ? to_json(*ch.triangle) : Json(nullptr);
  }
  return j;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"concordia: concordant forms, theta-congruent numbers and the curves E(m,n)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  unsigned jobs = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", jobs, "Worker threads for searches and sweeps")->check(CLI::PositiveNumber);

  std::string m, n, p, q, k, r, s, bound, x, y, z, w, u, v, xi, eta, zeta, a, b, c, alpha, beta, gamma, coords;
  bool check_oracle = false, use_cache = false, deep = false;

  auto* classify = app.add_subcommand("classify", "Torsion class, certificate and torsion points of E(m,n)");
  classify->add_option("--m", m);
  classify->add_option("--n", n);
  classify->add_option("--p", p);
  classify->add_option("--q", q);
  classify->add_option("--k", k);
  classify->add_flag("--check", check_oracle, "Cross-check against the Nagell-Lutz oracle");

  auto* solve = app.add_subcommand("solve", "Solve a concordant-form or theta-congruent triple");
  solve->require_subcommand(1);
  auto* solve_conc = solve->add_subcommand("concordant");
  solve_conc->add_option("--p", p)->required();
  solve_conc->add_option("--q", q)->required();
  solve_conc->add_option("--k", k)->required();
  solve_conc->add_option("--bound", bound);
  auto* solve_theta = solve->add_subcommand("theta");
  solve_theta->add_option("--r", r)->required();
  solve_theta->add_option("--s", s)->required();
  solve_theta->add_option("--k", k)->required();
  solve_theta->add_option("--bound", bound);

  auto* convert = app.add_subcommand("convert", "Convert between triple and point encodings");
  convert->require_subcommand(1);
  auto* conv_f = convert->add_subcommand("f", "(r,s,k) -> (p,q,k)");
  conv_f->add_option("--r", r)->required();
  conv_f->add_option("--s", s)->required();
  conv_f->add_option("--k", k)->required();
  auto* conv_g = convert->add_subcommand("g", "(p,q,k) -> (r,s,k)");
  conv_g->add_option("--p", p)->required();
  conv_g->add_option("--q", q)->required();
  conv_g->add_option("--k", k)->required();
  auto* conv_point = convert->add_subcommand("point", "E(m,n) point -> quadric -> progression -> triangle");
  conv_point->add_option("--m", m)->required();
  conv_point->add_option("--n", n)->required();
  conv_point->add_option("--x", x)->required();
  conv_point->add_option("--y", y)->required();
  auto* conv_quadric = convert->add_subcommand("quadric", "Q(m,n) point -> E(m,n) point");
  conv_quadric->add_option("--m", m)->required();
  conv_quadric->add_option("--n", n)->required();
  conv_quadric->add_option("--coords", coords, "X0,X1,X2,X3")->required();
  auto* conv_ap = convert->add_subcommand("ap", "Progression -> quadric point and triangle");
  conv_ap->add_option("--alpha", alpha)->required();
  conv_ap->add_option("--beta", beta)->required();
  conv_ap->add_option("--gamma", gamma)->required();
  conv_ap->add_option("--p", p)->required();
  conv_ap->add_option("--q", q)->required();
  conv_ap->add_option("--k", k)->required();
  auto* conv_tri = convert->add_subcommand("triangle", "Triangle -> progression and quadric point");
  conv_tri->add_option("--a", a)->required();
  conv_tri->add_option("--b", b)->required();
  conv_tri->add_option("--c", c)->required();
  conv_tri->add_option("--r", r)->required();
  conv_tri->add_option("--s", s)->required();

  auto* verify = app.add_subcommand("verify", "Check a candidate solution");
  verify->require_subcommand(1);
  auto* verify_conc = verify->add_subcommand("concordant");
  verify_conc->add_option("--m", m)->required();
  verify_conc->add_option("--n", n)->required();
  verify_conc->add_option("--x", x)->required();
  verify_conc->add_option("--y", y)->required();
  verify_conc->add_option("--z", z)->required();
  verify_conc->add_option("--w", w)->required();

  auto* search = app.add_subcommand("search", "Height-bounded rational point search");
  search->add_option("--m", m)->required();
  search->add_option("--n", n)->required();
  search->add_option("--bound", bound)->required();
  search->add_flag("--cache", use_cache, "Memoize results ($CONCORDIA_CACHE or ./concordia-cache.json)");

  auto* family = app.add_subcommand("family", "Torsion families");
  family->require_subcommand(1);
  auto* fam4 = family->add_subcommand("order4");
  fam4->add_option("--u", u)->required();
  fam4->add_option("--v", v)->required();
  auto* fam8 = family->add_subcommand("order8");
  fam8->add_option("--xi", xi)->required();
  fam8->add_option("--eta", eta)->required();
  fam8->add_option("--zeta", zeta)->required();
  auto* fam36 = family->add_subcommand("order36");
  fam36->add_option("--a", a)->required();
  fam36->add_option("--b", b)->required();

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");
  selftest->add_flag("--deep", deep, "Include the full oracle-equivalence grid");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("concordia");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s_ : argv_store) argv.push_back(s_.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadArgs;
  }

  auto emit = [&](const Json& j) {
    if (format == "text") {
      detail::write_text(out, j);
    } else {
      out << j.dump(2) << "\n";
    }
  };

  using detail::arg;
  int code = kOk;
  try {
    if (*classify) {
      std::optional<Curve> curve;
      if (!m.empty() || !n.empty()) {
        if (m.empty() || n.empty() || !p.empty() || !q.empty() || !k.empty()) {
          throw UsageError("classify takes either --m/--n or --p/--q/--k");
        }
        curve.emplace(arg("m", m), arg("n", n));
      } else {
        if (p.empty() || q.empty() || k.empty()) throw UsageError("classify takes either --m/--n or --p/--q/--k");
        curve = ConcordantTriple(arg("p", p), arg("q", q), arg("k", k)).curve();
      }
      auto ts = torsion_subgroup(*curve);
      Json j{{"curve", to_json(*curve)},
             {"torsion", to_json(ts.classification)},
             {"points", points_json(ts.points, *curve)},
             {"k_constraint", check_k_constraint(ts.classification.normalized, ts.classification.group)}};
      if (check_oracle) {
        bool agree = torsion_oracle(*curve, jobs) == ts.points;
        j["oracle_agrees"] = agree;
        if (!agree) code = kInconsistent;
      }
      if (!j["k_constraint"].get<bool>()) code = kInconsistent;
      emit(j);
    } else if (*solve_conc) {
      ConcordantTriple t(arg("p", p), arg("q", q), arg("k", k));
      emit(to_json(solve_concordant(t, detail::optional_arg("bound", bound), jobs)));
    } else if (*solve_theta) {
      CongruentTriple t(arg("r", r), arg("s", s), arg("k", k));
      emit(to_json(solve_theta_congruent(t, detail::optional_arg("bound", bound), jobs)));
    } else if (*conv_f) {
      CongruentTriple t(arg("r", r), arg("s", s), arg("k", k));
      emit(Json{{"congruent", to_json(t)}, {"concordant", to_json(f(t))}});
    } else if (*conv_g) {
      ConcordantTriple t(arg("p", p), arg("q", q), arg("k", k));
      emit(Json{{"concordant", to_json(t)}, {"congruent", to_json(g(t))}});
    } else if (*conv_point) {
      Curve cv(arg("m", m), arg("n", n));
      Point pt = cv.point(detail::rational_arg("x", x), detail::rational_arg("y", y));
      emit(detail::chain_json(pt, cv));
    } else if (*conv_quadric) {
      Curve cv(arg("m", m), arg("n", n));
      std::vector<Integer> xs;
      std::stringstream ss(coords);
      for (std::string part; std::getline(ss, part, ',');) xs.push_back(arg("coords", part));
      if (xs.size() != 4) throw UsageError("--coords needs four comma-separated integers");
      QuadricPoint sq(cv, xs[0], xs[1], xs[2], xs[3]);
      Json j{{"curve", to_json(cv)}, {"quadric", to_json(sq)}, {"point", to_json(phi(sq, cv))}};
      emit(j);
    } else if (*conv_ap) {
      APTriple t(detail::rational_arg("alpha", alpha), detail::rational_arg("beta", beta),
                 detail::rational_arg("gamma", gamma), arg("p", p), arg("q", q), arg("k", k));
      auto sq = ap_to_quadric(t);
      Curve cv(Integer(-t.p * t.k), Integer(t.q * t.k));
      emit(Json{{"ap", to_json(t)},
                {"quadric", to_json(sq)},
                {"point", to_json(phi(sq, cv))},
                {"triangle", to_json(ap_to_triangle(t))}});
    } else if (*conv_tri) {
      Triangle tri(detail::rational_arg("a", a), detail::rational_arg("b", b), detail::rational_arg("c", c), arg("r", r),
                   arg("s", s));
      auto t = triangle_to_ap(tri);
      emit(Json{{"triangle", to_json(tri)}, {"ap", to_json(t)}, {"quadric", to_json(ap_to_quadric(t))}});
    } else if (*verify_conc) {
      auto verdict = verify_concordant_solution(arg("m", m), arg("n", n), arg("x", x), arg("y", y), arg("z", z),
                                                arg("w", w));
      emit(Json{{"verdict", to_string(verdict)}});
      if (verdict == Verdict::invalid) code = kVerifyFailed;
    } else if (*search) {
      Curve cv(arg("m", m), arg("n", n));
      Integer h = arg("bound", bound);
      auto pts = detail::cached_search(cv, h, jobs, use_cache);
      Json arr = Json::array();
      for (const auto& pt : pts) {
        arr.push_back(Json{{"point", to_json(pt)}, {"order", to_json(order_of(pt, cv))}, {"is_double", is_double(pt, cv)}});
      }
      emit(Json{{"curve", to_json(cv)}, {"bound", to_json(h)}, {"points", std::move(arr)}});
    } else if (*family) {
      FamilyRecord fr = *fam4 ? gen_order4_family(arg("u", u), arg("v", v))
                      : *fam8 ? gen_order8_family(arg("xi", xi), arg("eta", eta), arg("zeta", zeta))
                              : gen_order36_family(arg("a", a), arg("b", b));
      Json j = to_json(fr);
      auto tc = classify_torsion(fr.curve);
      j["classified"] = to_json(tc);
      emit(j);
      if (!contains_group(tc.group, fr.expected)) code = kInconsistent;
    } else if (*selftest) {
      auto results = run_selftest(deep, jobs);
      Json arr = Json::array();
      for (const auto& res : results) {
        arr.push_back(Json{{"suite", res.name}, {"checks", res.checks}, {"passed", res.passed()}, {"failures", res.failures}});
        if (!res.passed()) code = std::max<int>(code, res.inconsistency ? kInconsistent : kVerifyFailed);
      }
      emit(Json{{"deep", deep}, {"suites", std::move(arr)}});
    }
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::logic_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  }
  return code;
}

}  // namespace concordia::cli
