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

// Factorization of univariate polynomials over a prime field F_p:
// squarefree decomposition, distinct-degree splitting, then Cantor-Zassenhaus
// equal-degree splitting with a fixed-seed generator so results are
// reproducible run to run.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shimbelyi/algebra/poly.hpp"

namespace shimbelyi {

using FpPoly = Poly<ResidueInt>;

struct FactorMultiplicity {
  FpPoly factor;
  long multiplicity = 1;
};

inline FpPoly to_fp(const ZPoly& f, const ModulusPtr& p) {
  return FpPoly(std::vector<ResidueInt>(
      [&] {
        std::vector<ResidueInt> v;
        for (const auto& c : f.coeffs()) v.emplace_back(c, p);
        return v;
      }()));
}

inline ZPoly lift_to_z(const FpPoly& f) {
  std::vector<Integer> v;
  for (const auto& c : f.coeffs()) v.push_back(c.value());
  return ZPoly(std::move(v));
}

namespace detail {

inline const ModulusPtr& field_of(const FpPoly& f) {
  for (const auto& c : f.coeffs())
    if (c.has_modulus()) return c.modulus_ptr();
  throw std::invalid_argument("polynomial over F_p carries no modulus");
}

inline bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long i = a.degree(); i >= 0; --i) {
    const auto& ca = a.coeffs()[static_cast<std::size_t>(i)].value();
    const auto& cb = b.coeffs()[static_cast<std::size_t>(i)].value();
    if (ca != cb) return ca < cb;
  }
  return false;
}

/// g with g(x)^p = f(x) for f whose derivative vanishes identically.
inline FpPoly pth_root(const FpPoly& f, const Integer& p) {
  const unsigned long pp = p.get_ui();
  std::vector<ResidueInt> v;
  for (std::size_t i = 0; i < f.size(); i += pp) v.push_back(f.coeffs()[i]);  // a^p = a in F_p
  return FpPoly(std::move(v));
}

/// Squarefree decomposition of a monic polynomial: pairs (squarefree, multiplicity).
inline std::vector<std::pair<FpPoly, long>> squarefree_decomposition(const FpPoly& f, const Integer& p) {
  std::vector<std::pair<FpPoly, long>> out;
  if (f.degree() <= 0) return out;
  FpPoly c = poly_gcd(f, f.derivative());
  FpPoly w = exact_quotient(f, c);
  long i = 1;
  while (w.degree() > 0) {
    FpPoly y = poly_gcd(w, c);
    FpPoly fac = exact_quotient(w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = exact_quotient(c, y);
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c, p), p)) {
      out.emplace_back(g, m * p.get_si());
    }
  }
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<FpPoly, long>> distinct_degree(FpPoly f, const Integer& p) {
  std::vector<std::pair<FpPoly, long>> out;
  const FpPoly x = FpPoly::x();
  FpPoly h = x;
  for (long d = 1; 2 * d <= f.degree(); ++d) {
    h = pow_mod(h, p, f);
    FpPoly g = poly_gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = exact_quotient(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

/// Splits a monic squarefree f whose irreducible factors all have degree d.
inline void equal_degree(const FpPoly& f, long d, const Integer& p, std::mt19937_64& rng,
                         std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const ModulusPtr& mod = field_of(f);
  std::uniform_int_distribution<unsigned long> coeff(0, p.get_ui() - 1);
  Integer qd = pow_int(p, static_cast<unsigned long>(d));
  while (true) {
    std::vector<ResidueInt> rv;
    for (long i = 0; i < f.degree(); ++i) rv.emplace_back(Integer(coeff(rng)), mod);
    FpPoly a(std::move(rv));
    if (a.degree() <= 0) continue;
    FpPoly g = poly_gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(exact_quotient(f, g), d, p, rng, out);
      return;
    }
    FpPoly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      FpPoly t = a % f, acc = a % f;
      for (long i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      b = acc;
    } else {
      b = pow_mod(a, Integer((qd - 1) / 2), f) - FpPoly(ResidueInt(Integer(1), mod));
    }
    g = poly_gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(exact_quotient(f, g), d, p, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Factors a nonzero f over F_p into monic irreducibles with multiplicities.
/// The leading coefficient is dropped; factors are sorted by degree, then
/// coefficients.
inline std::vector<FactorMultiplicity> poly_factor_modp(const FpPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("poly_factor_modp: zero polynomial");
  std::vector<FactorMultiplicity> out;
  if (f.degree() == 0) return out;
  const ModulusPtr& mod = detail::field_of(f);
  if (mod->exponent != 1) throw std::invalid_argument("poly_factor_modp: modulus must be prime");
  const Integer& p = mod->prime;
  std::mt19937_64 rng(0x5eed2329ull);
  for (auto& [sf, mult] : detail::squarefree_decomposition(f.monic(), p)) {
    for (auto& [part, d] : detail::distinct_degree(sf, p)) {
      std::vector<FpPoly> pieces;
      detail::equal_degree(part, d, p, rng, pieces);
      for (auto& g : pieces) out.push_back({g, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorMultiplicity& a, const FactorMultiplicity& b) {
    if (detail::poly_less(a.factor, b.factor)) return true;
    if (detail::poly_less(b.factor, a.factor)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

/// Irreducibility over F_p (f of degree >= 1).
inline bool is_irreducible_modp(const FpPoly& f) {
  auto fac = poly_factor_modp(f);
  return fac.size() == 1 && fac[0].multiplicity == 1;
}

}  // namespace shimbelyi
