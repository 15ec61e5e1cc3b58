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

// JSON encoding of every library type. Rationals are always strings
// ("3", "-75/8"); integers are JSON numbers when they fit in int64 and
// decimal strings otherwise; the point at infinity is "O". Object keys keep
// insertion order so output is byte-stable.

#include <json.hpp>

#include <string>
#include <vector>

#include "concordia/problems.hpp"

namespace concordia {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& z) {
  if (auto v = to_int64(z)) return Json(*v);
  return Json(to_string(z));
}

inline Json to_json(const Rational& q) { return Json(to_string(q)); }

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline Json to_json(const Point& p) {
  if (p.is_infinity()) return Json("O");
  return Json::array({to_string(p.x()), to_string(p.y())});
}

inline Point point_from_json(const Json& j, const Curve& c) {
  if (j.is_string() && j.get<std::string>() == "O") return Point::infinity();
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a point, got " + j.dump());
  return c.point(parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()));
}

inline Json to_json(const PointOrder& o) {
  if (o) return Json(*o);
  return Json("infinite");
}

inline Json to_json(const Curve& c) { return Json{{"m", to_json(c.m())}, {"n", to_json(c.n())}}; }

inline Json to_json(const NormalizedParams& np) {
  return Json{{"p", to_json(np.p)}, {"q", to_json(np.q)}, {"k", to_json(np.k)}, {"d", to_json(np.d)}};
}

inline Json certificate_json(TorsionGroup g, const Certificate& cert) {
  Json j{{"class", to_string(g)}};
  if (auto* c4 = std::get_if<FourTorsionCert>(&cert)) {
    j["u"] = to_json(c4->u);
    j["v"] = to_json(c4->v);
  } else if (auto* c8 = std::get_if<EightTorsionCert>(&cert)) {
    j["xi"] = to_json(c8->xi);
    j["eta"] = to_json(c8->eta);
    j["zeta"] = to_json(c8->zeta);
  } else if (auto* c6 = std::get_if<SixTorsionCert>(&cert)) {
    j["a"] = to_json(c6->a);
    j["b"] = to_json(c6->b);
  }
  return j;
}

inline Certificate certificate_from_json(const Json& j) {
  auto g = parse_torsion_group(j.at("class").get<std::string>());
  switch (g) {
    case TorsionGroup::Z2xZ2: return std::monostate{};
    case TorsionGroup::Z2xZ4: return FourTorsionCert{integer_from_json(j.at("u")), integer_from_json(j.at("v"))};
    case TorsionGroup::Z2xZ8:
      return EightTorsionCert{integer_from_json(j.at("xi")), integer_from_json(j.at("eta")),
                              integer_from_json(j.at("zeta"))};
    case TorsionGroup::Z2xZ6: return SixTorsionCert{integer_from_json(j.at("a")), integer_from_json(j.at("b"))};
  }
  throw std::logic_error("bad TorsionGroup");
}

inline Json to_json(const TorsionClass& t) {
  return Json{{"group", to_string(t.group)},
              {"certificate", certificate_json(t.group, t.certificate)},
              {"reduced_curve", to_json(t.frame.reduced)},
              {"d", to_json(t.frame.d)},
              {"shift", to_json(t.frame.shift)},
              {"normalized", to_json(t.normalized)}};
}

inline Json points_json(const std::vector<Point>& pts, const Curve& c) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(Json{{"point", to_json(p)}, {"order", to_json(order_of(p, c))}});
  return arr;
}

inline Json to_json(const QuadricPoint& s) {
  Json arr = Json::array();
  for (const auto& x : s.coords()) arr.push_back(to_json(x));
  return arr;
}

inline Json to_json(const ConcordantTriple& t) { return Json{{"p", to_json(t.p)}, {"q", to_json(t.q)}, {"k", to_json(t.k)}}; }

inline Json to_json(const CongruentTriple& t) { return Json{{"r", to_json(t.r)}, {"s", to_json(t.s)}, {"k", to_json(t.k)}}; }

inline Json to_json(const APTriple& t) {
  return Json{{"alpha", to_json(t.alpha)}, {"beta", to_json(t.beta)}, {"gamma", to_json(t.gamma)},
              {"p", to_json(t.p)},         {"q", to_json(t.q)},       {"k", to_json(t.k)}};
}

inline Json to_json(const Triangle& t) {
  return Json{{"a", to_json(t.a)}, {"b", to_json(t.b)}, {"c", to_json(t.c)},
              {"r", to_json(t.r)}, {"s", to_json(t.s)}, {"k", to_json(t.k())}};
}

inline Json to_json(const Solution& s) {
  Json j{{"point", to_json(s.point)},
         {"order", to_json(s.order)},
         {"provenance", to_string(s.provenance)},
         {"quadric", to_json(s.chain.quadric)},
         {"ap", s.chain.ap ? to_json(*s.chain.ap) : Json(nullptr)},
         {"triangle", s.chain.triangle ? to_json(*s.chain.triangle) : Json(nullptr)}};
  if (!s.chain.reason.empty()) j["reason"] = s.chain.reason;
  return j;
}

inline Json to_json(const SolutionReport& r) {
  Json j;
  if (auto* ct = std::get_if<ConcordantTriple>(&r.input)) {
    j["problem"] = "concordant";
    j["input"] = to_json(*ct);
  } else {
    j["problem"] = "theta";
    j["input"] = to_json(std::get<CongruentTriple>(r.input));
  }
  j["concordant_triple"] = to_json(r.concordant);
  j["curve"] = to_json(r.curve);
  j["torsion"] = to_json(r.torsion);
  j["search"] = Json{{"bound", r.search_bound ? to_json(*r.search_bound) : Json(nullptr)}, {"performed", r.searched}};
  j["decidability"] = r.decidability;
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(to_json(s));
  j["solutions"] = std::move(sols);
  if (std::holds_alternative<CongruentTriple>(r.input)) {
    Json tris = Json::array();
    for (const auto& tc : r.triangles) {
      Json gens = Json::array();
      for (const auto& p : tc.generators) gens.push_back(to_json(p));
      tris.push_back(Json{{"triangle", to_json(tc.triangle)}, {"generators", std::move(gens)}});
    }
    j["triangles"] = std::move(tris);
  }
  return j;
}

inline Json to_json(const FamilyRecord& f) {
  Json params;
  for (const auto& [name, value] : f.params) params[name] = to_json(value);
  return Json{{"family", to_string(f.family)},
              {"params", std::move(params)},
              {"curve", to_json(f.curve)},
              {"expected_torsion", to_string(f.expected)},
              {"concordant_triple", to_json(f.concordant)},
              {"congruent",
               Json{{"curve", to_json(f.congruent.curve)},
                    {"scaled_by_four", f.congruent.scaled_by_four},
                    {"concordant_triple", to_json(f.congruent.concordant)},
                    {"triple", to_json(f.congruent.triple)}}}};
}

}  // namespace concordia
