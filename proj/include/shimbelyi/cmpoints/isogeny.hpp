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

#include <cmath>
#include <future>
#include <vector>

#include "shimbelyi/curve/minimal.hpp"

namespace shimbelyi {

/// Trace of Frobenius p + 1 - #E(F_p) at a prime of good reduction.
inline long trace_of_frobenius(const QCurve& c, long p) { return p + 1 - count_points_modp(c, p); }

struct PrimeComparison {
  long p = 0;
  long ap_a = 0, ap_b = 0;
  bool match() const { return ap_a == ap_b; }
};

struct IsogenyEvidence {
  QCurve curve_a, curve_b;
  long bound = 0;
  std::vector<PrimeComparison> primes;
  /// Primes skipped because one of the curves has bad reduction there.
  std::vector<long> bad_primes;
  bool hasse_ok = true;

  bool all_match() const {
    for (const auto& c : primes)
      if (!c.match()) return false;
    return true;
  }
  std::vector<long> mismatches() const {
    std::vector<long> out;
    for (const auto& c : primes)
      if (!c.match()) out.push_back(c.p);
    return out;
  }
};

/// Compares a_p at every prime p <= bound where both curves have good reduction.
inline IsogenyEvidence isogeny_evidence(const QCurve& a, const QCurve& b, long bound, unsigned jobs = 1) {
  const QCurve ma = minimal_model(a).curve, mb = minimal_model(b).curve;
  const Rational da = ma.discriminant(), db = mb.discriminant();
  IsogenyEvidence out{a, b, bound, {}, {}, true};
  std::vector<long> good;
  for (long p : small_primes_up_to(bound)) {
    if (da.get_num() % p == 0 || db.get_num() % p == 0)
      out.bad_primes.push_back(p);
    else
      good.push_back(p);
  }
  out.primes.resize(good.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < good.size(); i += step)
      out.primes[i] = {good[i], trace_of_frobenius(ma, good[i]), trace_of_frobenius(mb, good[i])};
  };
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned j = 0; j < jobs; ++j) tasks.push_back(std::async(std::launch::async, work, j, jobs));
    for (auto& t : tasks) t.get();
  }
  for (const auto& c : out.primes) {
    // |a_p| <= 2 sqrt(p) <=> a_p^2 <= 4p
    if (c.ap_a * c.ap_a > 4 * c.p || c.ap_b * c.ap_b > 4 * c.p) out.hasse_ok = false;
  }
  return out;
}

}  // namespace shimbelyi
