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
#include <string>

#include "shimbelyi/cover/modp28.hpp"
#include "shimbelyi/cover/newton.hpp"
#include "shimbelyi/cover/reconstruct.hpp"
#include "shimbelyi/cover/theorem1_data.hpp"
#include "shimbelyi/cover/verify.hpp"

namespace shimbelyi {

/// Every stage of the degree-28 reconstruction, kept even when a later
/// stage fails.
struct PipelineResult {
  ModPSolution modp;
  VerifyReport modp_report;
  std::optional<LiftResult> lift;
  std::optional<ReconstructionResult> rational;
  std::optional<VerifyReport> rational_report;
  std::string failure;
  bool matches_reference = false;

  bool ok() const {
    return failure.empty() && modp_report.all_passed() && rational_report && rational_report->all_passed() &&
           matches_reference;
  }
};

/// True iff sol is, coefficient for coefficient, the reference solution on
/// [0,1,1,-44704,-3655907].
inline bool equals_reference_cover(const CoverSolution<Rational>& sol) {
  auto c = share(theorem1::curve());
  if (!(*sol.curve == *c)) return false;
  return sol.f4.u() == theorem1::f4(c).u() && sol.f4.v() == theorem1::f4(c).v() && sol.f9.u() == theorem1::f9(c).u() &&
         sol.f9.v() == theorem1::f9(c).v() && sol.f14.u() == theorem1::f14(c).u() &&
         sol.f14.v() == theorem1::f14(c).v() && sol.alpha == theorem1::alpha() && sol.beta == theorem1::beta();
}

inline PipelineResult reproduce_theorem1(long steps = 7, unsigned jobs = 1) {
  PipelineResult out{solve_modp_28(), {}, std::nullopt, std::nullopt, std::nullopt, {}, false};
  out.modp_report = verify_cover(out.modp.cover, {false, false});
  try {
    NewtonOptions opt;
    opt.jobs = jobs;
    out.lift = newton_lift(seed_unknowns(out.modp.cover), steps, opt);
    out.rational = reconstruct_cover(out.lift->unknowns);
  } catch (const std::exception& e) {
    out.failure = e.what();
    return out;
  }
  out.rational_report = verify_cover(out.rational->normalized, {true, true});
  out.matches_reference = equals_reference_cover(out.rational->normalized);
  return out;
}

}  // namespace shimbelyi
