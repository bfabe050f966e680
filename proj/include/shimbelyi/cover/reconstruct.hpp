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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shimbelyi/algebra/ratrecon.hpp"
#include "shimbelyi/cover/newton.hpp"

namespace shimbelyi {

class ReconstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedRational {
  std::string name;
  Rational value;
};

struct ReconstructionResult {
  std::vector<NamedRational> values;    // short model, gauge t1 = 1
  CoverSolution<Rational> short_model;  // y^2 = x^3 + a x + b
  MinimalModel minimal;                 // short model -> minimal model
  CoverSolution<Rational> normalized;   // on the minimal model, primitive integral F_n
};

/// Primitive integral multiple of f with positive leading coefficient.
inline CoordRingElem<Rational> primitive_integral(const CoordRingElem<Rational>& f) {
  Integer den = 1, num = 0;
  for (const QPoly* part : {&f.u(), &f.v()})
    for (const auto& c : part->coeffs()) {
      den = lcm(den, c.get_den());
      num = gcd(num, c.get_num());
    }
  Rational scale = make_rational(den, num);
  if (sgn(f.leading()) < 0) scale = -scale;
  return scale * f;
}

namespace detail {

/// x -> lambda^2 x, y -> lambda^3 y with lambda = t1, so that the y
/// coefficient of F4 becomes 1. In the b = 9a gauge t1 and the e_i are only
/// defined over a quadratic extension of Q; after this change every unknown
/// is rational.
inline std::vector<std::pair<std::string, ResidueInt>> regauge_t1(const Unknowns& v) {
  using namespace gauge;
  const ResidueInt lam = v[kT1];
  const ResidueInt li = lam.inverse();
  auto p = [&](int k) {
    ResidueInt r = in_context(ResidueInt(1), lam);
    for (int i = 0; i < k; ++i) r *= li;
    return r;
  };
  return {
      {"a", v[kA] * p(4)},
      {"b", ResidueInt(9) * v[kA] * p(6)},
      {"t4", v[kT4] * p(4)},
      {"t2", v[kT2] * p(2)},
      {"t1", v[kT1] * p(1)},
      {"e0", v[kE0] * p(9)},
      {"e1", v[kE1] * p(7)},
      {"s3", v[kS3] * p(6)},
      {"e2", v[kE2] * p(5)},
      {"s2", v[kS2] * p(4)},
      {"e3", v[kE3] * p(3)},
      {"s1", v[kS1] * p(2)},
      {"e4", v[kE4] * p(1)},
      {"alpha", v[kAlpha]},
      {"beta", v[kBeta] * p(1)},
  };
}

}  // namespace detail

/// Recognizes the 29-adic solution as rational data, checks the identity
/// exactly over Q, and transports it to the minimal model with primitive
/// integral F_n (F4's y coefficient made positive using P -> -P).
inline ReconstructionResult reconstruct_cover(const Unknowns& lifted) {
  const Integer modulus = lifted.at(0).modulus();
  std::vector<NamedRational> values;
  for (const auto& [name, residue] : detail::regauge_t1(lifted)) {
    auto q = rat_reconstruct(residue.value(), modulus);
    if (!q)
      throw ReconstructionFailed("no rational number of bounded height matches '" + name + "' mod 29^" +
                                 std::to_string(lifted[0].modulus_ptr()->exponent));
    values.push_back({name, *q});
  }
  auto val = [&](const char* name) {
    for (const auto& nv : values)
      if (nv.name == name) return nv.value;
    throw std::logic_error("reconstruct_cover: missing value");
  };

  auto curve = share(QCurve(0, 0, 0, val("a"), val("b")));
  if (is_zero(curve->discriminant())) throw ReconstructionFailed("reconstructed curve is singular");
  CoordRingElem<Rational> f4(curve, QPoly{val("t4"), val("t2"), 1}, QPoly{val("t1")});
  CoordRingElem<Rational> f9(curve, QPoly{val("e0"), val("e1"), val("e2"), val("e3"), val("e4")},
                             QPoly{val("s3"), val("s2"), val("s1"), 1});
  CoverSolution<Rational> short_model{"Q", curve, f4, f9, build_f14(f4, f9), val("alpha"), val("beta")};
  if (!short_model.identity_holds()) throw ReconstructionFailed("alpha F4^7 + beta F9^3 != F14^2 over Q");

  MinimalModel minimal = minimal_model(*curve);
  auto target = share(minimal.curve);
  std::array<CoordRingElem<Rational>, 3> fs{transform_function(f4, minimal.map, target),
                                            transform_function(f9, minimal.map, target),
                                            transform_function(short_model.f14, minimal.map, target)};
  for (auto& f : fs) f = primitive_integral(f);
  if (sgn(fs[0].v()[0]) < 0)
    for (auto& f : fs) f = primitive_integral(neg_pullback(f));
  auto normalized = make_cover_solution<Rational>("Q", fs[0], fs[1], fs[2]);
  if (!normalized.identity_holds()) throw ReconstructionFailed("identity fails on the minimal model");
  return ReconstructionResult{std::move(values), std::move(short_model), std::move(minimal), std::move(normalized)};
}

}  // namespace shimbelyi
