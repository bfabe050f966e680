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

#include <string>
#include <vector>

#include "shimbelyi/coordring/coordring.hpp"
#include "shimbelyi/curve/minimal.hpp"

namespace shimbelyi {

/// F14^2 = alpha F4^7 + beta F9^3 on a Weierstrass curve, with t = F14^2 / (alpha F4^7).
template <class R>
struct CoverSolution {
  std::string ring;  // "Q", "Fp:29" or "Zpk:29^k"
  CurvePtr<R> curve;
  CoordRingElem<R> f4, f9, f14;
  R alpha, beta;

  CoordRingElem<R> residual() const { return alpha * pow(f4, 7) + beta * pow(f9, 3) - pow(f14, 2); }
  bool identity_holds() const { return residual().is_zero(); }
};

/// Coefficient of the monomial of pole order d (x^(d/2) or x^((d-3)/2) y).
template <class R>
R coefficient_at_degree(const CoordRingElem<R>& f, long d) {
  if (d < 0 || d == 1) return R(0);
  if (d % 2 == 0) return f.u()[static_cast<std::size_t>(d / 2)];
  return f.v()[static_cast<std::size_t>((d - 3) / 2)];
}

/// alpha, beta with F14^2 = alpha F4^7 + beta F9^3 read off from the two top
/// monomials (x^14 and x^12 y). The caller checks the full identity.
template <class R>
std::pair<R, R> fit_alpha_beta(const CoordRingElem<R>& f4, const CoordRingElem<R>& f9, const CoordRingElem<R>& f14) {
  CoordRingElem<R> f4_7 = pow(f4, 7), f14_2 = pow(f14, 2);
  R alpha = divide(f14_2.leading(), f4_7.leading());
  CoordRingElem<R> rest = f14_2 - alpha * f4_7;
  R beta = divide(coefficient_at_degree(rest, 27), pow(f9, 3).leading());
  return {alpha, beta};
}

template <class R>
CoverSolution<R> make_cover_solution(std::string ring, CoordRingElem<R> f4, CoordRingElem<R> f9,
                                     CoordRingElem<R> f14) {
  auto [alpha, beta] = fit_alpha_beta(f4, f9, f14);
  CurvePtr<R> c = f4.curve_ptr();
  return CoverSolution<R>{std::move(ring), c, std::move(f4), std::move(f9), std::move(f14), alpha, beta};
}

}  // namespace shimbelyi
