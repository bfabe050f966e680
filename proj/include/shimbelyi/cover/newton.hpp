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

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "shimbelyi/cover/modp28.hpp"

namespace shimbelyi {

class SingularJacobian : public std::runtime_error {
 public:
  explicit SingularJacobian(std::size_t column)
      : std::runtime_error("Jacobian has no unit pivot in column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Unknowns of the gauge-fixed system on y^2 = x^3 + a x + 9a, with
///   F4 = x^2 + t1 y + t2 x + t4,
///   F9 = (x^3 + s1 x^2 + s2 x + s3) y + e4 x^4 + e3 x^3 + e2 x^2 + e1 x + e0,
/// ordered by the pole order of the monomial they multiply.
namespace gauge {
enum Index : std::size_t { kA, kT4, kT2, kT1, kE0, kE1, kS3, kE2, kS2, kE3, kS1, kE4, kAlpha, kBeta, kCount };
inline constexpr std::array<const char*, kCount> kNames{"a", "t4", "t2", "t1", "e0", "e1", "s3",
                                                        "e2", "s2", "e3", "s1", "e4", "alpha", "beta"};
inline constexpr std::size_t kXRows = 15;  // coefficients of x^0 .. x^14
inline constexpr std::size_t kYRows = 13;  // coefficients of x^0 y .. x^12 y
}  // namespace gauge

using Unknowns = std::vector<ResidueInt>;

/// Which equations enter the linear solve of each Newton step.
enum class NewtonRows {
  kXOnly,            // the x^i coefficients alone
  kXPlusLeadingY,    // the x^i coefficients and the x^12 y coefficient
  kAll,              // all 28 coefficients
};

inline std::vector<std::size_t> row_selection(NewtonRows rows) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gauge::kXRows; ++i) out.push_back(i);
  if (rows == NewtonRows::kXPlusLeadingY) out.push_back(gauge::kXRows + gauge::kYRows - 1);
  if (rows == NewtonRows::kAll)
    for (std::size_t i = 0; i < gauge::kYRows; ++i) out.push_back(gauge::kXRows + i);
  return out;
}

/// The cover described by a vector of unknowns, with F14 = 3 F4 F9' - 7 F4' F9.
inline CoverSolution<ResidueInt> gauged_solution(const Unknowns& v, const std::string& ring) {
  using namespace gauge;
  const ResidueInt one = in_context(ResidueInt(1), v[kA]);
  auto curve = share(WeierstrassCurve<ResidueInt>(0, 0, 0, v[kA], ResidueInt(9) * v[kA]));
  CoordRingElem<ResidueInt> f4(curve, Poly<ResidueInt>{v[kT4], v[kT2], one}, Poly<ResidueInt>{v[kT1]});
  CoordRingElem<ResidueInt> f9(curve, Poly<ResidueInt>{v[kE0], v[kE1], v[kE2], v[kE3], v[kE4]},
                               Poly<ResidueInt>{v[kS3], v[kS2], v[kS1], one});
  CoordRingElem<ResidueInt> f14 = build_f14(f4, f9);
  return CoverSolution<ResidueInt>{ring, curve, f4, f9, f14, v[kAlpha], v[kBeta]};
}

/// All 28 equations: x^i coefficients of alpha F4^7 + beta F9^3 - F14^2 first,
/// then the x^i y coefficients.
inline std::vector<ResidueInt> gauged_residual(const Unknowns& v) {
  CoordRingElem<ResidueInt> r = gauged_solution(v, "").residual();
  if (r.u().degree() >= static_cast<long>(gauge::kXRows) || r.v().degree() >= static_cast<long>(gauge::kYRows))
    throw std::logic_error("gauged_residual: residual exceeds degree 28");
  std::vector<ResidueInt> out;
  for (std::size_t i = 0; i < gauge::kXRows; ++i) out.push_back(in_context(r.u()[i], v[0]));
  for (std::size_t i = 0; i < gauge::kYRows; ++i) out.push_back(in_context(r.v()[i], v[0]));
  return out;
}

/// Moves the mod-29 representative to the lifting gauge (F4, F9 monic and
/// b = 9a) via x -> u^2 x, y -> u^3 y with u^2 = b/(9a).
inline Unknowns seed_unknowns(const CoverSolution<Fp>& rep) {
  const auto& c = *rep.curve;
  if (!c.is_short()) throw std::invalid_argument("seed_unknowns: representative must be a short model");
  // b'/a' = (b/a) / u^2 = 9
  const Fp nine = in_context(Fp(9), c.a4());
  Fp u2 = c.a6() / (c.a4() * nine);
  auto roots = detail::sqrt_modp(u2);
  if (roots.empty()) throw InconsistentSystem("seed_unknowns: b/(9a) is not a square mod 29");
  Fp u = roots.back();
  for (const auto& cand : roots)  // the smaller root, for determinism
    if (cand.value() < u.value()) u = cand;
  ModelMap<Fp> m{u, in_context(Fp(0), u), in_context(Fp(0), u), in_context(Fp(0), u)};
  auto target = share(transform(c, m));
  auto f4 = transform_function(rep.f4, m, target);
  auto f9 = transform_function(rep.f9, m, target);
  f4 = inverse(f4.leading()) * f4;
  f9 = inverse(f9.leading()) * f9;
  auto [alpha, beta] = fit_alpha_beta(f4, f9, build_f14(f4, f9));

  using namespace gauge;
  Unknowns v(kCount, in_context(Fp(0), u));
  v[kA] = target->a4();
  v[kT4] = f4.u()[0];
  v[kT2] = f4.u()[1];
  v[kT1] = f4.v()[0];
  v[kE0] = f9.u()[0];
  v[kE1] = f9.u()[1];
  v[kE2] = f9.u()[2];
  v[kE3] = f9.u()[3];
  v[kE4] = f9.u()[4];
  v[kS3] = f9.v()[0];
  v[kS2] = f9.v()[1];
  v[kS1] = f9.v()[2];
  v[kAlpha] = alpha;
  v[kBeta] = beta;
  for (auto& x : v) x = in_context(x, u);
  for (const auto& r : gauged_residual(v))
    if (!r.is_zero()) throw InconsistentSystem("seed_unknowns: transported seed does not solve the system mod 29");
  return v;
}

using IntMatrix = std::vector<std::vector<Integer>>;

/// Finite-difference Jacobian: column j is (R(v + h e_j) - R(v)) / h reduced
/// mod h, where R is evaluated mod h^2. Columns are computed on `jobs` threads.
inline IntMatrix finite_difference_jacobian(const Unknowns& v, const Integer& h, const std::vector<std::size_t>& rows,
                                            const std::vector<ResidueInt>& base, unsigned jobs = 1) {
  const std::size_t cols = v.size();
  IntMatrix jac(rows.size(), std::vector<Integer>(cols));
  const Integer& big = v[0].modulus();
  auto column = [&](std::size_t j) {
    Unknowns w = v;
    w[j] += ResidueInt(h, v[0].modulus_ptr());
    auto r = gauged_residual(w);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Integer diff = mod_floor(r[rows[i]].value() - base[rows[i]].value(), big);
      jac[i][j] = mod_floor(Integer(diff / h), h);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cols)));
  if (jobs == 1) {
    for (std::size_t j = 0; j < cols; ++j) column(j);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t j = t; j < cols; j += jobs) column(j);
      });
    for (auto& th : pool) th.join();
  }
  return jac;
}

/// Solves J w = rhs mod p^k for an overdetermined consistent system using
/// unit pivots only. Leftover rows must reduce to 0 = 0.
inline std::vector<Integer> solve_unit_pivot(IntMatrix a, std::vector<Integer> rhs, const Integer& p, const Integer& m) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c, ++r) {
    std::size_t k = r;
    while (k < rows && a[k][c] % p == 0) ++k;
    if (k == rows) throw SingularJacobian(c);
    std::swap(a[k], a[r]);
    std::swap(rhs[k], rhs[r]);
    Integer inv = inverse_mod(a[r][c], m);
    for (auto& x : a[r]) x = mod_floor(x * inv, m);
    rhs[r] = mod_floor(rhs[r] * inv, m);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Integer f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod_floor(a[i][j] - f * a[r][j], m);
      rhs[i] = mod_floor(rhs[i] - f * rhs[r], m);
    }
  }
  for (std::size_t i = cols; i < rows; ++i)
    if (mod_floor(rhs[i], m) != 0) throw InconsistentSystem("solve_unit_pivot: overdetermined system is inconsistent");
  return std::vector<Integer>(rhs.begin(), rhs.begin() + static_cast<long>(cols));
}

/// Rank over F_p of an integer matrix.
inline std::size_t rank_mod_p(IntMatrix a, const Integer& p) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t k = rank;
    while (k < rows && a[k][c] % p == 0) ++k;
    if (k == rows) continue;
    std::swap(a[k], a[rank]);
    Integer inv = inverse_mod(a[rank][c], p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      Integer f = mod_floor(a[i][c] * inv, p);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = mod_floor(a[i][j] - f * a[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

struct JacobianRankReport {
  std::size_t columns = 0;
  std::size_t rank_x_rows = 0;
  std::size_t rank_x_plus_leading_y = 0;
  std::size_t rank_all_rows = 0;
  std::vector<std::string> zero_columns_on_x_rows;  // unknowns invisible to the x^i rows mod p

  bool x_rows_full_rank() const { return rank_x_rows == columns; }
};

/// The Jacobian at a mod-29 seed, reduced mod 29.
inline JacobianRankReport jacobian_rank_at_seed(const Unknowns& seed) {
  const Integer p = 29;
  auto mod = make_modulus(p, 2);
  Unknowns v;
  for (const auto& x : seed) v.push_back(x.reencode(mod));
  auto base = gauged_residual(v);
  auto all = row_selection(NewtonRows::kAll);
  IntMatrix jac = finite_difference_jacobian(v, p, all, base);
  auto pick = [&](NewtonRows rows) {
    IntMatrix sub;
    for (std::size_t r : row_selection(rows)) sub.push_back(jac[r]);
    return sub;
  };
  JacobianRankReport rep;
  rep.columns = seed.size();
  rep.rank_x_rows = rank_mod_p(pick(NewtonRows::kXOnly), p);
  rep.rank_x_plus_leading_y = rank_mod_p(pick(NewtonRows::kXPlusLeadingY), p);
  rep.rank_all_rows = rank_mod_p(jac, p);
  for (std::size_t j = 0; j < seed.size(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < gauge::kXRows; ++i) zero = zero && jac[i][j] % p == 0;
    if (zero) rep.zero_columns_on_x_rows.emplace_back(gauge::kNames[j]);
  }
  return rep;
}

struct NewtonOptions {
  NewtonRows rows = NewtonRows::kXPlusLeadingY;
  unsigned jobs = 1;
};

struct NewtonStepReport {
  long step = 0;
  unsigned long exponent = 0;  // working modulus 29^exponent
  bool x_rows_vanish = false;
  bool y_rows_vanish = false;
  long min_valuation = 0;      // of the residual before reduction, capped at exponent
};

struct LiftResult {
  Unknowns unknowns;
  std::vector<NewtonStepReport> steps;

  CoverSolution<ResidueInt> solution() const {
    return gauged_solution(unknowns, "Zpk:29^" + std::to_string(unknowns[0].modulus_ptr()->exponent));
  }
};

inline long residual_valuation(const std::vector<ResidueInt>& r, const Integer& p, unsigned long cap) {
  long best = static_cast<long>(cap);
  for (const auto& c : r)
    if (!c.is_zero()) best = std::min(best, valuation(c.value(), p));
  return best;
}

/// n Newton steps from a mod-29 seed; step n works mod 29^(2^n).
inline LiftResult newton_lift(const Unknowns& seed, long steps, NewtonOptions opt = {}) {
  const Integer p = 29;
  LiftResult out{seed, {}};
  const auto rows = row_selection(opt.rows);
  for (long n = 1; n <= steps; ++n) {
    const unsigned long half_exp = 1ul << (n - 1), exp = 1ul << n;
    const Integer h = pow_int(p, half_exp);
    auto mod = make_modulus(p, static_cast<unsigned>(exp));
    Unknowns v;
    for (const auto& x : out.unknowns) v.push_back(x.reencode(mod));
    auto base = gauged_residual(v);
    for (const auto& r : base)
      if (r.value() % h != 0) throw InconsistentSystem("newton_lift: iterate is not a solution mod 29^" + std::to_string(half_exp));
    IntMatrix jac = finite_difference_jacobian(v, h, rows, base, opt.jobs);
    std::vector<Integer> rhs;
    for (std::size_t r : rows) rhs.push_back(mod_floor(-Integer(base[r].value() / h), h));
    auto w = solve_unit_pivot(std::move(jac), std::move(rhs), p, h);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += ResidueInt(h * w[j], mod);
    auto after = gauged_residual(v);
    NewtonStepReport rep;
    rep.step = n;
    rep.exponent = exp;
    rep.x_rows_vanish = std::all_of(after.begin(), after.begin() + gauge::kXRows, [](const ResidueInt& c) { return c.is_zero(); });
    rep.y_rows_vanish = std::all_of(after.begin() + gauge::kXRows, after.end(), [](const ResidueInt& c) { return c.is_zero(); });
    rep.min_valuation = residual_valuation(after, p, exp);
    out.steps.push_back(rep);
    out.unknowns = std::move(v);
  }
  return out;
}

}  // namespace shimbelyi
