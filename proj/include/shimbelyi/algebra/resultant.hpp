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
#include <vector>

#include "shimbelyi/algebra/poly.hpp"

namespace shimbelyi {

namespace detail {

inline Rational exact_divide(const Rational& a, const Rational& b) { return Rational(a / b); }
inline Integer exact_divide(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
template <class R>
Poly<R> exact_divide(const Poly<R>& a, const Poly<R>& b) {
  return exact_quotient(a, b);
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant over an integral domain.
template <class R>
R determinant(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  R sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return R(0);
      std::swap(m[k], m[swap_row]);
      sign = R(-sign);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = detail::exact_divide(num, prev);
      }
    }
    prev = m[k][k];
  }
  return R(sign * m[n - 1][n - 1]);
}

/// Resultant of two polynomials over an integral domain, via the Sylvester matrix.
template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
  if (f.is_zero() || g.is_zero()) return R(0);
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  if (m == 0 && n == 0) return R(1);
  if (m == 0) {
    R r(1);
    for (std::size_t i = 0; i < n; ++i) r = R(r * f.leading());
    return r;
  }
  if (n == 0) {
    R r(1);
    for (std::size_t i = 0; i < m; ++i) r = R(r * g.leading());
    return r;
  }
  const std::size_t size = m + n;
  std::vector<std::vector<R>> s(size, std::vector<R>(size, R(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  return determinant(std::move(s));
}

/// Number of distinct real roots in (a, b] of a squarefree rational polynomial,
/// by Sturm's theorem. Infinite endpoints are signalled with nullopt.
inline long sturm_count(const QPoly& f, const std::optional<Rational>& a,
                        const std::optional<Rational>& b) {
  std::vector<QPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = divrem(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto sign_at = [&](const QPoly& p, const std::optional<Rational>& x, bool minus_inf) {
    if (p.is_zero()) return 0;
    if (!x) {
      int s = sgn(p.leading());
      if (minus_inf && p.degree() % 2 == 1) s = -s;
      return s;
    }
    return sgn(p(*x));
  };
  auto variations = [&](const std::optional<Rational>& x, bool minus_inf) {
    long v = 0;
    int last = 0;
    for (const auto& p : seq) {
      int s = sign_at(p, x, minus_inf);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(a, true) - variations(b, false);
}

}  // namespace shimbelyi
