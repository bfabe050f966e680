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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shimbelyi/cover/solution.hpp"
#include "shimbelyi/cover/theorem1_data.hpp"

namespace shimbelyi {

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Fp = ResidueInt;

/// Parameters of the degree-28 ansatz in characteristic 29 on the short
/// model y^2 = x^3 + a x + b:
///   F4 = x^2 + t1 y + t2 x + t4,  F9 = (x^3 + s1 x^2 + s2 x + s3) y,
/// and xi = 8x + 6 s1 with F9'' = xi F9 (derivation x' = y).
struct ModPAnsatz {
  long p = 29;
  Fp s1, s2, s3, t1, t2, t4, a, b;

  Poly<Fp> xi() const { return Poly<Fp>{Fp(6) * s1, Fp(8)}; }

  /// Names of the stated relations that fail.
  std::vector<std::string> failed_relations() const {
    std::vector<std::string> bad;
    auto need = [&](bool ok, const char* what) {
      if (!ok) bad.emplace_back(what);
    };
    need(s2 == Fp(-12) * s1 * s1 - Fp(8) * a, "s2 = -12 s1^2 - 8a");
    need(s3 == Fp(7) * b - Fp(3) * s1 * s1 * s1 - a * s1, "s3 = 7b - 3 s1^3 - a s1");
    need((s1 * b + s1 * s1 * s1 * s1 + Fp(9) * a * s1 * s1 + Fp(9) * a * a).is_zero(), "s1 b + s1^4 + 9a s1^2 + 9a^2 = 0");
    need(t2 == Fp(11) * (t1 * t1 - s1), "t2 = 11 (t1^2 - s1)");
    need(t1 * t1 == Fp(5) * s1, "t1^2 = 5 s1");
    need(t4 == s1 * s1 + Fp(3) * a, "t4 = s1^2 + 3a");
    need(a == Fp(9) * s1 * s1, "a = 9 s1^2");
    need(!t1.is_zero(), "t1 != 0");
    return bad;
  }
};

namespace detail {

/// Square roots of r in F_p by search (p is small here).
inline std::vector<Fp> sqrt_modp(const Fp& r) {
  std::vector<Fp> out;
  const long p = r.modulus().get_si();
  for (long z = 0; z < p; ++z) {
    Fp w(Integer(z), r.modulus_ptr());
    if (w * w == r) out.push_back(w);
  }
  return out;
}

}  // namespace detail

struct ModPSolution {
  ModPAnsatz ansatz;
  CoverSolution<Fp> cover;
};

/// Solves the relation chain for the degree-28 ansatz modulo 29. The chain
/// leaves a one-parameter family in s1 (the scaling gauge x -> u^2 x,
/// y -> u^3 y); choosing s1 = 1 and t1 = 11 gives the representative on
/// y^2 = x^3 + 9x + 1. F14 is taken proportional to 3 F4 F9' - 7 F4' F9 and
/// scaled to leading coefficient 1.
inline ModPSolution solve_modp_28(long p = 29) {
  if (p != 29) throw std::invalid_argument("solve_modp_28: relations are specific to p = 29");
  const ModulusPtr mod = modp29::modulus();
  auto fp = [&](long v) { return Fp(Integer(v), mod); };

  // The family: a = 9 s1^2, b = -(s1^4 + 9 a s1^2 + 9 a^2) / s1, t1^2 = 5 s1.
  std::optional<ModPAnsatz> chosen;
  for (long k = 1; k < p && !chosen; ++k) {
    ModPAnsatz z;
    z.s1 = fp(k);
    z.a = fp(9) * z.s1 * z.s1;
    z.b = -(z.s1 * z.s1 * z.s1 * z.s1 + fp(9) * z.a * z.s1 * z.s1 + fp(9) * z.a * z.a) / z.s1;
    if (!(z.a == fp(9) && z.b == fp(1))) continue;
    for (const Fp& t1 : detail::sqrt_modp(fp(5) * z.s1)) {
      if (!(t1 == fp(11))) continue;
      z.t1 = t1;
      z.t2 = fp(11) * (t1 * t1 - z.s1);
      z.t4 = z.s1 * z.s1 + fp(3) * z.a;
      z.s2 = fp(-12) * z.s1 * z.s1 - fp(8) * z.a;
      z.s3 = fp(7) * z.b - fp(3) * z.s1 * z.s1 * z.s1 - z.a * z.s1;
      chosen = z;
    }
  }
  if (!chosen) throw InconsistentSystem("solve_modp_28: no member of the family has a = 9, b = 1");
  const ModPAnsatz& z = *chosen;
  if (auto bad = z.failed_relations(); !bad.empty()) throw InconsistentSystem("solve_modp_28: relation fails: " + bad.front());

  auto curve = share(WeierstrassCurve<Fp>::make(fp(0), fp(0), fp(0), z.a, z.b));
  CoordRingElem<Fp> f4(curve, Poly<Fp>{z.t4, z.t2, fp(1)}, Poly<Fp>{z.t1});
  CoordRingElem<Fp> f9(curve, {}, Poly<Fp>{z.s3, z.s2, z.s1, fp(1)});

  // F9'' = xi F9 with x' = y, y' = (3x^2 + a)/2.
  DerivationContext<Fp> half{DerivationConvention::kHalf};
  if (!(derive(derive(f9, half), half) == CoordRingElem<Fp>(curve, z.xi()) * f9))
    throw InconsistentSystem("solve_modp_28: F9'' != xi F9");

  CoordRingElem<Fp> f14 = build_f14(f4, f9);
  f14 = inverse(f14.leading()) * f14;
  auto cover = make_cover_solution<Fp>("Fp:29", f4, f9, f14);
  if (!cover.identity_holds()) throw InconsistentSystem("solve_modp_28: alpha F4^7 + beta F9^3 != F14^2");
  return ModPSolution{z, cover};
}

}  // namespace shimbelyi
