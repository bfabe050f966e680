// Copyright 2026 The shimbelyi Authors
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

// JSON encodings. Objects use nlohmann::json's default std::map storage, so
// keys come out sorted; every integer and rational is a decimal string.

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

#include "shimbelyi/cmpoints/cm.hpp"
#include "shimbelyi/cmpoints/isogeny.hpp"
#include "shimbelyi/cover/pipeline.hpp"
#include "shimbelyi/cover/ramification.hpp"
#include "shimbelyi/cover/triple.hpp"
#include "shimbelyi/zeta/area.hpp"

namespace shimbelyi::io {

using Json = nlohmann::json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class R>
Json coeffs_json(const Poly<R>& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

template <class R>
Json curve_json(const WeierstrassCurve<R>& c) {
  Json a = Json::array();
  for (const auto& v : c.a_invariants()) a.push_back(to_string(v));
  return Json{{"a", a}};
}

inline Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::exception& e) {
    throw JsonFormatError(std::string("bad rational: ") + e.what());
  }
  throw JsonFormatError("expected a rational as a string or integer, got " + j.dump());
}

inline QCurve curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j["a"].is_array() || j["a"].size() != 5)
    throw JsonFormatError("curve JSON needs an array \"a\" of five coefficients");
  std::array<Rational, 5> a;
  for (std::size_t i = 0; i < 5; ++i) a[i] = rational_from_json(j["a"][i]);
  return QCurve::make(a[0], a[1], a[2], a[3], a[4]);
}

inline QCurve read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw JsonFormatError(path + ": " + e.what());
  }
  return curve_from_json(j);
}

template <class R>
Json point_json(const CurvePoint<R>& p) {
  if (p.is_infinity()) return "infinity";
  return Json{{"x", to_string(p.x())}, {"y", to_string(p.y())}};
}

template <class R>
Json element_json(const CoordRingElem<R>& f) {
  return Json{{"u", coeffs_json(f.u())}, {"v", coeffs_json(f.v())}};
}

template <class R>
Json cover_json(const CoverSolution<R>& s) {
  return Json{{"ring", s.ring},
              {"curve", curve_json(*s.curve)},
              {"F4", element_json(s.f4)},
              {"F9", element_json(s.f9)},
              {"F14", element_json(s.f14)},
              {"alpha", to_string(s.alpha)},
              {"beta", to_string(s.beta)}};
}

inline Json profile_json(const RamificationProfile& p) {
  Json parts = Json::array();
  for (const auto& part : p.partitions) parts.push_back(partition_string(part));
  return Json{{"degree", p.degree}, {"partitions", parts}};
}

/// {"degree": 28, "partitions": ["2^14", [3,3,...,1], ...], "base_genus": 0}
inline RamificationProfile profile_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("partitions") || !j["partitions"].is_array())
    throw ProfileError("profile JSON needs \"degree\" and an array \"partitions\"");
  std::string text = std::to_string(j["degree"].get<long>()) + ":";
  bool first = true;
  for (const auto& part : j["partitions"]) {
    if (!first) text += "|";
    first = false;
    if (part.is_string()) {
      text += part.get<std::string>();
    } else if (part.is_array()) {
      std::vector<long> v;
      for (const auto& e : part) v.push_back(e.get<long>());
      text += partition_string(v);
    } else {
      throw ProfileError("partition must be a string or an array of integers");
    }
  }
  RamificationProfile prof = parse_profile(text);
  prof.base_genus = j.value("base_genus", 0l);
  prof.validate();
  return prof;
}

inline Json report_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"all_passed", r.all_passed()}, {"checks", checks}};
}

inline Json cm_record_json(const CMRecord& r) {
  Json out{{"x", to_string(r.x)}, {"degree", r.degree}};
  out["t"] = r.t ? Json(to_string(*r.t)) : Json(nullptr);
  out["square_class"] = r.square_class.empty() ? Json(nullptr) : Json(r.square_class);
  if (r.norm) out["norm"] = to_string(*r.norm);
  return out;
}

inline Json area_json(const AreaResult& a) {
  return Json{{"conductor", a.conductor}, {"zeta_minus1", to_string(a.zeta_minus1)}, {"area", to_string(a.area)}};
}

inline Json triple_json(const PermTriple& t) {
  Json sigma = Json::array();
  for (const auto& s : t.sigma) {
    Json perm = Json::array();
    for (auto v : s) perm.push_back(v);
    sigma.push_back(perm);
  }
  return Json{{"degree", t.n},
              {"group_order", t.group_order},
              {"transitive", t.transitive},
              {"product_is_identity", t.product_is_identity()},
              {"profile", profile_json(t.profile())},
              {"sigma", sigma}};
}

inline Json evidence_json(const IsogenyEvidence& e) {
  Json primes = Json::array();
  for (const auto& c : e.primes)
    primes.push_back(Json{{"p", c.p}, {"ap_a", c.ap_a}, {"ap_b", c.ap_b}, {"match", c.match()}});
  return Json{{"curveA", curve_json(e.curve_a)}, {"curveB", curve_json(e.curve_b)}, {"bound", e.bound},
              {"primes", primes},           {"bad_primes", e.bad_primes},  {"all_match", e.all_match()},
              {"mismatches", e.mismatches()}, {"hasse_ok", e.hasse_ok}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace shimbelyi::io
