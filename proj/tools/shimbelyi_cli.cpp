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

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "shimbelyi/cmpoints/cm.hpp"
#include "shimbelyi/cmpoints/isogeny.hpp"
#include "shimbelyi/cover/pipeline.hpp"
#include "shimbelyi/cover/triple.hpp"
#include "shimbelyi/curve/genus2.hpp"
#include "shimbelyi/io/json.hpp"
#include "shimbelyi/zeta/area.hpp"

namespace {

using shimbelyi::io::Json;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct JobConfig {
  unsigned jobs = 1;

  std::string profile_file;
  std::string profile_inline;

  long steps = 7;
  std::string out_dir;

  std::string cm_case;
  long cm_bound = 0;

  std::string curve_a, curve_b;
  long bound = 50;

  long conductor = 0;
  long q = 0;
  bool genus2 = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << shimbelyi::io::dump(j); }

void write_file(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << shimbelyi::io::dump(j);
}

int run_genus(const JobConfig& cfg) {
  if (cfg.profile_file.empty() == cfg.profile_inline.empty())
    throw UsageError("genus: give exactly one of --profile or --inline");
  shimbelyi::RamificationProfile prof;
  if (!cfg.profile_inline.empty()) {
    prof = shimbelyi::parse_profile(cfg.profile_inline);
  } else {
    std::ifstream in(cfg.profile_file);
    if (!in) throw UsageError("cannot open " + cfg.profile_file);
    Json j;
    try {
      in >> j;
    } catch (const Json::parse_error& e) {
      throw UsageError(cfg.profile_file + ": " + e.what());
    }
    prof = shimbelyi::io::profile_from_json(j);
  }
  std::cout << shimbelyi::rh_genus(prof) << "\n";
  return kOk;
}

int run_reproduce(const JobConfig& cfg) {
  if (cfg.steps < 1 || cfg.steps > 10) throw UsageError("--steps must be between 1 and 10");
  fs::path dir;
  if (!cfg.out_dir.empty()) {
    dir = cfg.out_dir;
    fs::create_directories(dir);
  }
  auto res = shimbelyi::reproduce_theorem1(cfg.steps, cfg.jobs);

  Json summary{{"steps", cfg.steps}, {"modp_checks_passed", res.modp_report.all_passed()}};
  if (!dir.empty()) {
    write_file(dir / "modp29.json", shimbelyi::io::cover_json(res.modp.cover));
    write_file(dir / "modp29_report.json", shimbelyi::io::report_json(res.modp_report));
  }
  if (res.lift) {
    Json steps = Json::array();
    for (const auto& s : res.lift->steps)
      steps.push_back(Json{{"step", s.step},
                           {"modulus", "29^" + std::to_string(s.exponent)},
                           {"x_rows_vanish", s.x_rows_vanish},
                           {"y_rows_vanish", s.y_rows_vanish}});
    summary["newton"] = steps;
    if (!dir.empty()) write_file(dir / "lifted.json", shimbelyi::io::cover_json(res.lift->solution()));
  }
  if (res.rational) {
    summary["curve"] = shimbelyi::io::curve_json(*res.rational->normalized.curve);
    summary["alpha"] = shimbelyi::to_string(res.rational->normalized.alpha);
    summary["beta"] = shimbelyi::to_string(res.rational->normalized.beta);
    summary["identity_verified"] = res.rational->normalized.identity_holds();
    summary["matches_reference"] = res.matches_reference;
    if (!dir.empty()) write_file(dir / "rational.json", shimbelyi::io::cover_json(res.rational->normalized));
  }
  if (res.rational_report) {
    summary["checks_passed"] = res.rational_report->all_passed();
    if (!dir.empty()) write_file(dir / "report.json", shimbelyi::io::report_json(*res.rational_report));
  }
  if (!res.failure.empty()) summary["failure"] = res.failure;
  summary["ok"] = res.ok();
  emit(summary);
  if (!res.failure.empty()) std::cerr << "reproduce-theorem1: " << res.failure << "\n";
  return res.ok() ? kOk : kVerifyFailed;
}

int run_cm(const JobConfig& cfg) {
  Json out;
  bool ok = true;
  std::optional<shimbelyi::QCurve> partner_a, partner_b;
  if (cfg.cm_case == "147") {
    auto c = shimbelyi::share(shimbelyi::theorem1::curve());
    shimbelyi::CoverSolution<shimbelyi::Rational> sol{"Q",
                                                      c,
                                                      shimbelyi::theorem1::f4(c),
                                                      shimbelyi::theorem1::f9(c),
                                                      shimbelyi::theorem1::f14(c),
                                                      shimbelyi::theorem1::alpha(),
                                                      shimbelyi::theorem1::beta()};
    ok = sol.identity_holds();
    auto locus = shimbelyi::fixed_locus(sol, shimbelyi::InvolutionSpec::negation());
    Json records = Json::array();
    for (const auto& r : shimbelyi::cm_rational_points(sol, locus)) records.push_back(shimbelyi::io::cm_record_json(r));
    for (const auto& r : shimbelyi::cm_cubic_orbits(sol, locus)) records.push_back(shimbelyi::io::cm_record_json(r));
    Json roots = Json::array();
    for (const auto& r : locus.factorization.rational_roots) roots.push_back(shimbelyi::to_string(r));
    out = Json{{"case", "147"},
               {"curve", shimbelyi::io::curve_json(*c)},
               {"fixed_locus", Json{{"factor_degrees", locus.factorization.factor_degrees}, {"rational_roots", roots}}},
               {"records", records}};
    partner_a = shimbelyi::QCurve(0, 1, 1, -114, 473);
    partner_b = *c;
  } else if (cfg.cm_case == "162") {
    auto sol9 = shimbelyi::solve_cover_239();
    auto rep = shimbelyi::cm_points_239(sol9);
    Json records = Json::array();
    for (const auto& r : rep.records) records.push_back(shimbelyi::io::cm_record_json(r));
    auto minimal = shimbelyi::minimal_model(sol9.curve).curve;
    out = Json{{"case", "162"},
               {"curve", shimbelyi::io::curve_json(sol9.curve)},
               {"minimal_model", shimbelyi::io::curve_json(minimal)},
               {"w2_of_infinity", shimbelyi::io::point_json(rep.w2_of_infinity)},
               {"records", records}};
    ok = sol9.defect().is_zero();
    partner_a = shimbelyi::QCurve(1, -1, 1, -5, 5);
    partner_b = minimal;
  } else {
    throw UsageError("cm: --case must be 147 or 162");
  }
  if (cfg.cm_bound > 0) {
    auto ev = shimbelyi::isogeny_evidence(*partner_a, *partner_b, cfg.cm_bound, cfg.jobs);
    out["isogeny_evidence"] = shimbelyi::io::evidence_json(ev);
    ok = ok && ev.all_match();
  }
  emit(out);
  return ok ? kOk : kVerifyFailed;
}

int run_evidence(const JobConfig& cfg) {
  if (cfg.bound < 2) throw UsageError("--bound must be at least 2");
  auto read = [](const std::string& path) {
    try {
      return shimbelyi::io::read_curve_file(path);
    } catch (const shimbelyi::io::JsonFormatError& e) {
      throw UsageError(e.what());
    } catch (const shimbelyi::SingularCurve& e) {
      throw UsageError(e.what());
    }
  };
  const shimbelyi::QCurve a = read(cfg.curve_a), b = read(cfg.curve_b);
  auto ev = shimbelyi::isogeny_evidence(a, b, cfg.bound, cfg.jobs);
  emit(shimbelyi::io::evidence_json(ev));
  return ev.all_match() && ev.hasse_ok ? kOk : kVerifyFailed;
}

int run_area(const JobConfig& cfg) {
  shimbelyi::AreaResult r;
  try {
    r = shimbelyi::shimizu_area(cfg.conductor);
  } catch (const shimbelyi::UnsupportedConductor& e) {
    throw UsageError(e.what());
  }
  emit(shimbelyi::io::area_json(r));
  return kOk;
}

int run_triple(const JobConfig& cfg) {
  if (cfg.q != 8 && cfg.q != 27) throw UsageError("triple: --q must be 8 or 27");
  auto t = shimbelyi::build_triple_psl2(cfg.q);
  emit(shimbelyi::io::triple_json(t));
  return t.transitive && t.product_is_identity() ? kOk : kVerifyFailed;
}

int run_casestudy(const JobConfig& cfg) {
  if (!cfg.genus2) throw UsageError("casestudy: choose a case study, e.g. --genus2");
  auto r = shimbelyi::genus2_threecycle_check();
  emit(Json{{"case", "genus2"},
            {"sextic", shimbelyi::io::coeffs_json(shimbelyi::genus2_sextic())},
            {"sextic_invariant", r.sextic_invariant},
            {"order_three", r.order_three},
            {"orbit_of_zero", r.orbit_of_zero},
            {"point_on_curve", r.point_on_curve},
            {"pass", r.all()}});
  return r.all() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shimura curve Belyi covers: reconstruction, CM points and case studies"};
  app.require_subcommand(1);
  app.fallthrough();
  JobConfig cfg;
  app.add_option("--jobs", cfg.jobs, "worker threads for the data-parallel stages")->check(CLI::Range(1u, 64u));

  auto* genus = app.add_subcommand("genus", "genus of a cover from its ramification profile");
  genus->add_option("--profile", cfg.profile_file, "profile JSON file");
  genus->add_option("--inline", cfg.profile_inline, "profile such as 28:2^14|3^9,1|7^4");

  auto* repro = app.add_subcommand("reproduce-theorem1", "mod-29 solve, Newton lift, rational reconstruction");
  repro->add_option("--steps", cfg.steps, "Newton steps (modulus 29^(2^steps))")->capture_default_str();
  repro->add_option("--out", cfg.out_dir, "directory for the JSON artifacts");

  auto* cm = app.add_subcommand("cm", "CM points on the degree-28 or degree-9 cover");
  cm->add_option("--case", cfg.cm_case, "147 or 162")->required();
  cm->add_option("--bound", cfg.cm_bound, "also compare a_p with the isogenous curve up to this bound");

  auto* ev = app.add_subcommand("isogeny-evidence", "compare a_p of two curves at good primes");
  ev->add_option("--curveA", cfg.curve_a, "curve JSON")->required();
  ev->add_option("--curveB", cfg.curve_b, "curve JSON")->required();
  ev->add_option("--bound", cfg.bound, "largest prime")->capture_default_str();

  auto* area = app.add_subcommand("area", "hyperbolic area from zeta_K(-1)");
  area->add_option("--conductor", cfg.conductor, "conductor of the cyclic cubic field (7, 9 or 13)")->required();

  auto* triple = app.add_subcommand("triple", "generating triple in PSL2(F_q) acting on P^1(F_q)");
  triple->add_option("--q", cfg.q, "8 or 27")->required();

  auto* cs = app.add_subcommand("casestudy", "auxiliary case studies");
  cs->add_flag("--genus2", cfg.genus2, "the three-cycle on the genus-2 curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (genus->parsed()) return run_genus(cfg);
    if (repro->parsed()) return run_reproduce(cfg);
    if (cm->parsed()) return run_cm(cfg);
    if (ev->parsed()) return run_evidence(cfg);
    if (area->parsed()) return run_area(cfg);
    if (triple->parsed()) return run_triple(cfg);
    if (cs->parsed()) return run_casestudy(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const shimbelyi::ProfileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
