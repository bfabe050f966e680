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

#include <array>
#include <optional>

#include "shimbelyi/algebra/poly.hpp"

namespace shimbelyi {

/// The genus-2 curve y^2 = 4x^6 + 8x^5 + 37x^4 + 74x^3 + 57x^2 + 16x + 4 and
/// its automorphism (x, y) -> (-1/x - 1, y/x^3).
struct Genus2CaseStudy {
  bool sextic_invariant = false;  // x^6 f((-1-x)/x) == f(x)
  bool order_three = false;       // the Moebius matrix cubes to a scalar
  bool orbit_of_zero = false;     // 0 -> infinity -> -1 -> 0
  bool point_on_curve = false;    // (17/16, 31585/2048)

  bool all() const { return sextic_invariant && order_three && orbit_of_zero && point_on_curve; }
};

inline QPoly genus2_sextic() { return QPoly{4, 16, 57, 74, 37, 8, 4}; }

inline Genus2CaseStudy genus2_threecycle_check() {
  Genus2CaseStudy out;
  const QPoly f = genus2_sextic();

  // x^6 f((-1-x)/x) = sum c_i (-1-x)^i x^(6-i)
  QPoly lhs;
  const QPoly num{-1, -1};
  for (long i = 0; i <= 6; ++i) lhs += f[static_cast<std::size_t>(i)] * pow(num, static_cast<unsigned>(i)).shifted(static_cast<std::size_t>(6 - i));
  out.sextic_invariant = lhs == f;

  // x -> (a x + b)/(c x + d) with matrix [[-1,-1],[1,0]]
  using Mat = std::array<std::array<Rational, 2>, 2>;
  const Mat m{{{-1, -1}, {1, 0}}};
  auto mul = [](const Mat& p, const Mat& q) {
    Mat r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
    return r;
  };
  Mat m3 = mul(mul(m, m), m);
  out.order_three = m3[0][1] == 0 && m3[1][0] == 0 && m3[0][0] == m3[1][1] && m3[0][0] != 0;

  // nullopt stands for the point at infinity on the x-line
  auto apply = [&](const std::optional<Rational>& x) -> std::optional<Rational> {
    if (!x) return m[0][0] / m[1][0];
    Rational den = m[1][0] * *x + m[1][1];
    if (den == 0) return std::nullopt;
    return (m[0][0] * *x + m[0][1]) / den;
  };
  auto x1 = apply(Rational(0));
  auto x2 = apply(x1);
  auto x3 = apply(x2);
  out.orbit_of_zero = !x1 && x2 && *x2 == -1 && x3 && *x3 == 0;

  const Rational px = make_rational(17, 16), py = make_rational(31585, 2048);
  out.point_on_curve = py * py == f(px);
  return out;
}

}  // namespace shimbelyi
