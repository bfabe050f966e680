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

#include "shimbelyi/coordring/coordring.hpp"
#include "shimbelyi/curve/minimal.hpp"

namespace shimbelyi {

/// Published models and functions of the degree-28 cover, used as reference
/// values by tests and by the reproduction pipeline.
namespace theorem1 {

inline QCurve curve() { return QCurve(0, 1, 1, -44704, -3655907); }

inline QPoly qpoly(std::initializer_list<const char*> coeffs_low_first) {
  std::vector<Rational> v;
  for (const char* c : coeffs_low_first) v.push_back(parse_rational(c));
  return QPoly(std::move(v));
}

inline CoordRingElem<Rational> f4(const CurvePtr<Rational>& c) {
  return CoordRingElem<Rational>(c, qpoly({"-227671", "-1208", "1"}), qpoly({"91"}));
}

inline CoordRingElem<Rational> f9(const CurvePtr<Rational>& c) {
  return CoordRingElem<Rational>(
      c, -qpoly({"2319185361392", "29785004488", "163098512", "770584", "1015"}),
      qpoly({"-678909344", "-13656232", "-384", "8"}));
}

inline CoordRingElem<Rational> f14(const CurvePtr<Rational>& c) {
  return CoordRingElem<Rational>(
      c,
      qpoly({"53553894620234333456", "-95316727595264672", "-15704111899877744", "-116011622641292",
             "-238003853192", "-343453068", "400071", "8"}),
      -qpoly({"17681731246686360", "335969653582304", "4128079708928", "18880768004", "19974360", "8428"}));
}

inline Rational alpha() { return 64; }
inline Rational beta() { return -343; }

}  // namespace theorem1

/// The mod-29 representative on y^2 = x^3 + 9x + 1.
namespace modp29 {

inline ModulusPtr modulus() {
  static const ModulusPtr m = make_modulus(Integer(29));
  return m;
}

inline Poly<ResidueInt> fp_poly(std::initializer_list<long> coeffs_low_first) {
  std::vector<ResidueInt> v;
  for (long c : coeffs_low_first) v.emplace_back(Integer(c), modulus());
  return Poly<ResidueInt>(std::move(v));
}

inline WeierstrassCurve<ResidueInt> curve() {
  return WeierstrassCurve<ResidueInt>::short_form(ResidueInt(Integer(9), modulus()), ResidueInt(Integer(1), modulus()));
}

inline CoordRingElem<ResidueInt> f4(const CurvePtr<ResidueInt>& c) {
  return CoordRingElem<ResidueInt>(c, fp_poly({-1, -14, 1}), fp_poly({11}));
}
inline CoordRingElem<ResidueInt> f9(const CurvePtr<ResidueInt>& c) {
  return CoordRingElem<ResidueInt>(c, {}, fp_poly({-5, 3, 1, 1}));
}
inline CoordRingElem<ResidueInt> f14(const CurvePtr<ResidueInt>& c) {
  return CoordRingElem<ResidueInt>(c, fp_poly({-7, 10, 2, -10, -9, -5, -14, 1}), -fp_poly({3, 1, -3, -1, 0, 8}));
}
inline ResidueInt alpha() { return ResidueInt(Integer(1), modulus()); }
inline ResidueInt beta() { return ResidueInt(Integer(-6), modulus()); }

}  // namespace modp29
}  // namespace shimbelyi
