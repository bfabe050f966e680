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

// Factorization over Q: squarefree decomposition, factorization modulo a
// good prime, quadratic Hensel lifting of the factor tree, and recombination
// of lifted factors over subsets of size at most three. Inputs in this
// project have degree well below 30, which keeps the subset search small.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "shimbelyi/algebra/factor_modp.hpp"
#include "shimbelyi/algebra/poly.hpp"

namespace shimbelyi {

struct RationalFactorization {
  /// Every rational root, repeated according to multiplicity, ascending.
  std::vector<Rational> rational_roots;
  /// Degrees of the irreducible factors over Q, with multiplicity, ascending.
  std::vector<long> factor_degrees;
  /// Primitive irreducible integer factors (positive leading coefficient).
  std::vector<std::pair<ZPoly, long>> factors;
};

namespace detail {

inline ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) { return reduce_mod(a * b, m); }

/// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m) to the
/// same relations modulo m^2. h is monic.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  const Integer m2 = m * m;
  ZPoly e = reduce_mod(f - g * h, m2);
  auto [q, r] = divrem(mul_mod(s, e, m2), h);
  ZPoly g2 = reduce_mod(g + t * e + q * g, m2);
  ZPoly h2 = reduce_mod(h + r, m2);
  ZPoly b = reduce_mod(s * g2 + t * h2 - ZPoly(1), m2);
  auto [c, d] = divrem(mul_mod(s, b, m2), h2);
  s = reduce_mod(s - d, m2);
  t = reduce_mod(t - t * b - c * g2, m2);
  g = std::move(g2);
  h = std::move(h2);
}

inline ZPoly product_mod(const std::vector<ZPoly>& fs, std::size_t lo, std::size_t hi, const Integer& m) {
  ZPoly acc(1);
  for (std::size_t i = lo; i < hi; ++i) acc = mul_mod(acc, fs[i], m);
  return acc;
}

/// Lifts f = lc(f) * prod(local) (mod p) to modulus `target` = p^(2^j).
inline std::vector<ZPoly> lift_factor_tree(const ZPoly& f, const std::vector<ZPoly>& local, const ModulusPtr& p,
                                           const Integer& target) {
  const Integer& prime = p->prime;
  if (local.size() == 1) {
    Integer lc_inv = inverse_mod(mod_floor(f.leading(), target), target);
    return {reduce_mod(lc_inv * f, target)};
  }
  const std::size_t half = local.size() / 2;
  ZPoly g = reduce_mod(f.leading() * product_mod(local, 0, half, prime), prime);
  ZPoly h = product_mod(local, half, local.size(), prime);
  auto [one, s_fp, t_fp] = poly_xgcd(to_fp(g, p), to_fp(h, p));
  if (one.degree() != 0) throw std::logic_error("Hensel lifting: local factors are not coprime");
  ZPoly s = lift_to_z(s_fp), t = lift_to_z(t_fp);
  for (Integer m = prime; m < target; m = m * m) hensel_step(f, g, h, s, t, m);
  std::vector<ZPoly> left(local.begin(), local.begin() + static_cast<long>(half));
  std::vector<ZPoly> right(local.begin() + static_cast<long>(half), local.end());
  std::vector<ZPoly> out = lift_factor_tree(g, left, p, target);
  std::vector<ZPoly> more = lift_factor_tree(h, right, p, target);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

/// Exact division test over Z: returns the quotient when b | a.
inline std::optional<ZPoly> divides_z(const ZPoly& a, const ZPoly& b) {
  auto [q, r] = divrem(to_rational(a), to_rational(b));
  if (!r.is_zero()) return std::nullopt;
  for (const auto& c : q.coeffs())
    if (c.get_den() != 1) return std::nullopt;
  std::vector<Integer> v;
  for (const auto& c : q.coeffs()) v.push_back(c.get_num());
  return ZPoly(std::move(v));
}

inline Integer mignotte_bound(const ZPoly& f) {
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer n = isqrt(norm2) + 1;
  return pow_int(Integer(2), static_cast<unsigned long>(f.degree())) * n * abs_int(f.leading());
}

/// Zassenhaus recombination at one prime; nullopt when subsets of size <= 3
/// cannot certify the remaining factor as irreducible.
inline std::optional<std::vector<ZPoly>> zassenhaus_at(ZPoly f, const ModulusPtr& p,
                                                       const std::vector<FactorMultiplicity>& local_fp) {
  constexpr std::size_t kMaxSubset = 3;
  std::vector<ZPoly> local;
  for (const auto& fm : local_fp) local.push_back(lift_to_z(fm.factor));
  const Integer bound = 2 * mignotte_bound(f) + 1;
  Integer target = p->prime;
  while (target <= bound) target *= target;
  std::vector<ZPoly> lifted = lift_factor_tree(f, local, p, target);

  std::vector<ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size() && s <= kMaxSubset) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t depth, std::size_t start) -> bool {
      if (depth == s) {
        ZPoly cand = ZPoly(f.leading());
        for (auto i : idx) cand = mul_mod(cand, lifted[i], target);
        cand = primitive_part(reduce_symmetric(cand, target));
        if (auto q = divides_z(f, cand)) {
          found.push_back(cand);
          f = *q;
          std::vector<ZPoly> rest;
          for (std::size_t i = 0; i < lifted.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(lifted[i]);
          lifted = std::move(rest);
          return true;
        }
        return false;
      }
      for (std::size_t i = start; i < lifted.size(); ++i) {
        idx[depth] = i;
        if (search(depth + 1, i + 1)) return true;
      }
      return false;
    };
    hit = search(0, 0);
    if (!hit) ++s;
  }
  if (lifted.size() >= 2 * (kMaxSubset + 1)) return std::nullopt;
  if (f.degree() > 0) found.push_back(primitive_part(f));
  return found;
}

/// Irreducible factors of a primitive squarefree integer polynomial.
inline std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  if (f.degree() <= 1) return {primitive_part(f)};
  struct Candidate {
    ModulusPtr p;
    std::vector<FactorMultiplicity> local;
  };
  std::vector<Candidate> candidates;
  for (long q : small_primes_up_to(2000)) {
    if (candidates.size() >= 8) break;
    Integer pq(q);
    if (mpz_divisible_p(f.leading().get_mpz_t(), pq.get_mpz_t()) != 0) continue;
    ModulusPtr mod = make_modulus(pq);
    FpPoly fp = to_fp(f, mod);
    if (poly_gcd(fp, fp.derivative()).degree() != 0) continue;
    candidates.push_back({mod, poly_factor_modp(fp)});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.local.size() < b.local.size(); });
  for (const auto& c : candidates) {
    if (c.local.size() == 1) return {primitive_part(f)};
    if (auto res = zassenhaus_at(f, c.p, c.local)) return *res;
  }
  throw std::runtime_error("poly_factor_rational: recombination inconclusive at every candidate prime");
}

/// Squarefree decomposition over Q (Yun): (primitive part, multiplicity).
inline std::vector<std::pair<ZPoly, long>> squarefree_over_q(const QPoly& f) {
  std::vector<std::pair<ZPoly, long>> out;
  QPoly a = f.monic();
  QPoly b = poly_gcd(a, a.derivative());
  QPoly c = exact_quotient(a, b);
  QPoly d = exact_quotient(a.derivative(), b) - c.derivative();
  long i = 1;
  while (c.degree() > 0) {
    QPoly g = poly_gcd(c, d);
    if (g.degree() > 0) out.emplace_back(to_primitive_integer(g), i);
    c = exact_quotient(c, g);
    d = exact_quotient(d, g) - c.derivative();
    ++i;
  }
  return out;
}

}  // namespace detail

/// Rational roots and irreducible-factor degrees of f over Q.
inline RationalFactorization poly_factor_rational(const QPoly& f) {
  RationalFactorization out;
  if (f.degree() <= 0) return out;
  for (const auto& [part, mult] : detail::squarefree_over_q(f)) {
    for (auto& g : detail::factor_squarefree_z(part)) {
      out.factors.emplace_back(g, mult);
      for (long k = 0; k < mult; ++k) out.factor_degrees.push_back(g.degree());
      if (g.degree() == 1) {
        Rational root = make_rational(-g[0], g[1]);
        for (long k = 0; k < mult; ++k) out.rational_roots.push_back(root);
      }
    }
  }
  std::sort(out.factor_degrees.begin(), out.factor_degrees.end());
  std::sort(out.rational_roots.begin(), out.rational_roots.end());
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (long i = a.first.degree(); i >= 0; --i) {
      const auto ui = static_cast<std::size_t>(i);
      if (a.first[ui] != b.first[ui]) return a.first[ui] < b.first[ui];
    }
    return a.second < b.second;
  });
  return out;
}

}  // namespace shimbelyi
