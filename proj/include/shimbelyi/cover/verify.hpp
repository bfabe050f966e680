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
#include <type_traits>
#include <vector>

#include "shimbelyi/cover/solution.hpp"

namespace shimbelyi {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const VerifyCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  /// Over Q: norms of F4, F9, F14 squarefree. Off in characteristic 29, where
  /// F9 is odd and its zeros come in pairs +-P over the same x.
  bool norm_squarefree = true;
  /// The mod 13 / 43 / 29 parity phenomena of the minimal-model data.
  bool parity_phenomena = false;
};

namespace detail {

inline bool all_divisible(const QPoly& f, long p) {
  for (const auto& c : f.coeffs())
    if (c.get_num() % p != 0) return false;
  return true;
}

}  // namespace detail

/// y-part of F4 divisible by 13, y-part of F14 by 43, and F9 reduced modulo
/// 2y + a1 x + a3 divisible by 29.
inline std::vector<VerifyCheck> parity_checks(const CoverSolution<Rational>& sol) {
  std::vector<VerifyCheck> out;
  out.push_back({"f4_y_part_divisible_by_13", detail::all_divisible(sol.f4.v(), 13), to_string(sol.f4.v())});
  out.push_back({"f14_y_part_divisible_by_43", detail::all_divisible(sol.f14.v(), 43), to_string(sol.f14.v())});
  QPoly reduced = sol.f9.u() - Rational(1, 2) * (sol.f9.v() * sol.curve->y_linear());
  out.push_back({"f9_mod_2y_plus_h_divisible_by_29", detail::all_divisible(reduced, 29), to_string(reduced)});
  return out;
}

template <class R>
VerifyReport verify_cover(const CoverSolution<R>& sol, VerifyOptions opt = {}) {
  VerifyReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  add("identity", sol.identity_holds(), "alpha F4^7 + beta F9^3 = F14^2");
  add("degrees", sol.f4.degree() == 4 && sol.f9.degree() == 9 && sol.f14.degree() == 14,
      std::to_string(sol.f4.degree()) + "," + std::to_string(sol.f9.degree()) + "," + std::to_string(sol.f14.degree()));

  const std::array<std::pair<const char*, const CoordRingElem<R>*>, 3> fs{
      {{"f4", &sol.f4}, {"f9", &sol.f9}, {"f14", &sol.f14}}};
  for (const auto& [name, f] : fs) {
    // a multiple zero of f is a common zero of f and df/omega
    Poly<R> g = common_zeros(*f, derive(*f));
    add(std::string(name) + "_simple_zeros", g.degree() == 0, to_string(g));
  }
  Poly<R> shared = common_zeros(sol.f4, sol.f9);
  add("f4_f9_no_common_zeros", shared.degree() == 0, to_string(shared));

  if (opt.norm_squarefree) {
    for (const auto& [name, f] : fs) {
      Poly<R> n = norm(*f);
      Poly<R> g = poly_gcd(n, n.derivative());
      add(std::string(name) + "_norm_squarefree", g.degree() == 0, to_string(g));
    }
  }
  // t - 1 = beta F9^3 / (alpha F4^7) has pole order 27 - 28 = -1 at the base point
  add("t_minus_1_simple_zero_at_base", 7 * sol.f4.degree() - 3 * sol.f9.degree() == 1);

  if constexpr (std::is_same_v<R, Rational>) {
    if (opt.parity_phenomena)
      for (auto& c : parity_checks(sol)) rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace shimbelyi
