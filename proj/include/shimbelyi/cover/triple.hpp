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
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "shimbelyi/algebra/finite_field.hpp"
#include "shimbelyi/cover/ramification.hpp"

namespace shimbelyi {

using Perm = std::vector<std::uint32_t>;

class NoTriple : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p applied first, then q.
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

/// Cycle lengths, largest first.
inline std::vector<long> cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<long> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Permutations s[0] s[1] ... s[k-1] = id (composed left to right) on
/// {0, ..., n-1}. Rendered 1-based in reports.
struct PermTriple {
  std::size_t n = 0;
  std::vector<Perm> sigma;
  long group_order = 0;
  bool transitive = false;

  bool product_is_identity() const {
    Perm acc = sigma.at(0);
    for (std::size_t i = 1; i < sigma.size(); ++i) acc = compose(acc, sigma[i]);
    return is_identity(acc);
  }

  RamificationProfile profile() const {
    RamificationProfile prof;
    prof.degree = static_cast<long>(n);
    for (const auto& s : sigma) prof.partitions.push_back(cycle_type(s));
    return prof;
  }
};

namespace detail {

inline bool generated_orbit_is_everything(const std::vector<Perm>& gens, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::uint32_t x = stack.back();
    stack.pop_back();
    for (const auto& g : gens)
      if (!seen[g[x]]) {
        seen[g[x]] = true;
        ++count;
        stack.push_back(g[x]);
      }
  }
  return count == n;
}

/// Order of the group generated by `gens`, by breadth-first closure.
inline long closure_order(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  std::vector<Perm> frontier{Perm(gens.at(0).size())};
  for (std::size_t i = 0; i < frontier[0].size(); ++i) frontier[0][i] = static_cast<std::uint32_t>(i);
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Perm h = compose(g, s);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

/// PSL_2(F_q) acting on P^1(F_q); points 0..q-1 are field elements by
/// index and q is infinity.
class ProjectiveLineAction {
 public:
  explicit ProjectiveLineAction(const FiniteField& k) : q_(k.order()) {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    inv_.assign(q_, 0);
    for (std::uint32_t i = 0; i < q_; ++i)
      for (std::uint32_t j = 0; j < q_; ++j) {
        add_[i * q_ + j] = k.index(k.add(k.from_index(i), k.from_index(j)));
        mul_[i * q_ + j] = k.index(k.mul(k.from_index(i), k.from_index(j)));
      }
    for (std::uint32_t i = 1; i < q_; ++i) inv_[i] = k.index(k.inv(k.from_index(i)));
    neg_.assign(q_, 0);
    for (std::uint32_t i = 0; i < q_; ++i)
      for (std::uint32_t j = 0; j < q_; ++j)
        if (add_[i * q_ + j] == 0) neg_[i] = j;
    one_ = k.index(k.one());
  }

  using Matrix = std::array<std::uint32_t, 4>;  // [[a, b], [c, d]]

  std::uint32_t q() const { return q_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }

  Matrix random_sl2(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> pick(0, q_ - 1);
    for (;;) {
      std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (a == 0) continue;
      std::uint32_t d = mul(add(one_, mul(b, c)), inv_[a]);  // ad - bc = 1
      return {a, b, c, d};
    }
  }

  Matrix product(const Matrix& m, const Matrix& n) const {
    return {add(mul(m[0], n[0]), mul(m[1], n[2])), add(mul(m[0], n[1]), mul(m[1], n[3])),
            add(mul(m[2], n[0]), mul(m[3], n[2])), add(mul(m[2], n[1]), mul(m[3], n[3]))};
  }

  bool is_scalar(const Matrix& m) const { return m[1] == 0 && m[2] == 0 && m[0] == m[3]; }

  long projective_order(const Matrix& m) const {
    Matrix acc = m;
    for (long k = 1; k <= 2 * static_cast<long>(q_) + 2; ++k) {
      if (is_scalar(acc)) return k;
      acc = product(acc, m);
    }
    throw std::logic_error("projective_order: no order found");
  }

  /// x -> (a x + b) / (c x + d).
  Perm permutation(const Matrix& m) const {
    const std::uint32_t inf = q_;
    Perm p(q_ + 1);
    for (std::uint32_t x = 0; x < q_; ++x) {
      std::uint32_t num = add(mul(m[0], x), m[1]);
      std::uint32_t den = add(mul(m[2], x), m[3]);
      p[x] = den == 0 ? inf : mul(num, inv_[den]);
    }
    p[inf] = m[2] == 0 ? inf : mul(m[0], inv_[m[2]]);
    return p;
  }

 private:
  std::uint32_t q_;
  std::uint32_t one_ = 1;
  std::vector<std::uint32_t> add_, mul_, inv_, neg_;
};

}  // namespace detail

/// Searches PSL_2(F_q) for generators of orders (2, 3, m) with product one,
/// where m = 7 for q = 27 and m = 9 for q = 8.
inline PermTriple build_triple_psl2(long q, std::uint64_t seed = 20260101, long max_tries = 200000) {
  FiniteField k = q == 27 ? FiniteField::f27() : q == 8 ? FiniteField::f8() : throw std::invalid_argument("build_triple_psl2: q must be 8 or 27");
  const long third = q == 27 ? 7 : 9;
  const long expected = q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
  detail::ProjectiveLineAction act(k);
  std::mt19937_64 rng(seed);

  auto random_of_order = [&](long order) {
    for (;;) {
      auto m = act.random_sl2(rng);
      if (act.projective_order(m) == order) return m;
    }
  };

  for (long attempt = 0; attempt < max_tries; ++attempt) {
    auto m2 = random_of_order(2);
    auto m3 = random_of_order(3);
    // Permutations compose left to right, so sigma2 sigma3 corresponds to the
    // matrix product m3 * m2 acting on column vectors.
    auto m23 = act.product(m3, m2);
    if (act.projective_order(m23) != third) continue;
    Perm s2 = act.permutation(m2), s3 = act.permutation(m3);
    Perm s_last = inverse_perm(compose(s2, s3));
    PermTriple t;
    t.n = static_cast<std::size_t>(q + 1);
    t.sigma = {s2, s3, s_last};
    if (!t.product_is_identity()) throw std::logic_error("build_triple_psl2: product is not the identity");
    t.transitive = detail::generated_orbit_is_everything({s2, s3}, t.n);
    if (!t.transitive) continue;
    t.group_order = detail::closure_order({s2, s3});
    if (t.group_order != expected) continue;
    return t;
  }
  throw NoTriple("build_triple_psl2: search exhausted");
}

}  // namespace shimbelyi
