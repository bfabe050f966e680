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

// Arbitrary-precision integers and rationals (GMP-backed) plus the small
// amount of elementary number theory the rest of the library needs.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shimbelyi {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "n", "-n" or "n/d" (decimal).
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Canonical text form: "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rat(const Rational& base, long e) {
  Rational b = base;
  if (e < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    b = 1 / b;
    e = -e;
  }
  Rational r(pow_int(b.get_num(), static_cast<unsigned long>(e)),
             pow_int(b.get_den(), static_cast<unsigned long>(e)));
  return r;
}

/// Floor division with a nonnegative remainder for positive m.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_probable_prime(const Integer& n) {
  return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

inline bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// p-adic valuation of a nonzero integer.
inline long valuation(Integer n, const Integer& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// p-adic valuation of a nonzero rational.
inline long valuation(const Rational& q, const Integer& p) {
  if (q == 0) throw std::domain_error("valuation of zero");
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

namespace detail {

inline Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    auto f = [&](const Integer& v) { return mod_floor(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(128ul, r - k); ++i) {
          y = f(y);
          q = mod_floor(q * abs_int(x - y), n);
        }
        g = gcd(q, n);
        k += 128;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs_int(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(Integer n, std::map<Integer, long>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0). Trial division, then Pollard-Brent.
inline std::map<Integer, long> factor_integer(const Integer& n) {
  if (n == 0) throw std::domain_error("factor_integer(0)");
  std::map<Integer, long> out;
  Integer m = abs_int(n);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      m /= p;
      ++out[Integer(p)];
    }
  }
  for (unsigned long p = 11; p < 100000 && Integer(p) * p <= m; p += 2) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      m /= p;
      ++out[Integer(p)];
    }
  }
  detail::factor_into(m, out);
  return out;
}

/// Signed squarefree representative of the square class of a nonzero rational.
inline Integer squarefree_part(const Rational& q) {
  if (q == 0) throw std::domain_error("square class of zero");
  Integer result = q < 0 ? -1 : 1;
  for (const Integer* part : {&q.get_num(), &q.get_den()}) {
    for (const auto& [p, e] : factor_integer(*part)) {
      if (e % 2 != 0) result *= p;
    }
  }
  return result;
}

/// Modular inverse; throws std::domain_error when gcd(a, m) != 1.
inline Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("not invertible modulo " + m.get_str());
  }
  return r;
}

inline std::vector<long> small_primes_up_to(long bound) {
  std::vector<long> primes;
  std::vector<bool> composite(static_cast<std::size_t>(std::max(bound + 1, 2l)), false);
  for (long i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (long j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

}  // namespace shimbelyi
