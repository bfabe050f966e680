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
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shimbelyi/algebra/integer.hpp"

namespace shimbelyi {

class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ramification data of a cover of degree d over a base of genus
/// base_genus: one partition of d per branch point.
struct RamificationProfile {
  long degree = 0;
  std::vector<std::vector<long>> partitions;
  long base_genus = 0;

  void validate() const {
    if (degree < 1) throw ProfileError("profile degree must be positive");
    if (partitions.empty()) throw ProfileError("profile needs at least one branch point");
    for (const auto& part : partitions) {
      long sum = 0;
      for (long e : part) {
        if (e < 1) throw ProfileError("ramification indices must be positive");
        sum += e;
      }
      if (sum != degree)
        throw ProfileError("partition sums to " + std::to_string(sum) + ", expected " + std::to_string(degree));
    }
  }
};

/// Riemann-Hurwitz: 2g - 2 = d (2 g_base - 2) + sum over cycles of (e - 1).
inline long rh_genus(const RamificationProfile& prof) {
  prof.validate();
  long total = prof.degree * (2 * prof.base_genus - 2);
  for (const auto& part : prof.partitions)
    for (long e : part) total += e - 1;
  if (total % 2 != 0) throw ProfileError("Riemann-Hurwitz total is odd");
  long g = total / 2 + 1;
  if (g < 0) throw ProfileError("profile gives negative genus");
  return g;
}

/// Genus of a curve whose automorphism group attains the Hurwitz bound.
inline Rational hurwitz_genus_from_group_order(long n) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  return Rational(1) + make_rational(n, 84);
}

/// Parses "28:2^14|3^9,1|7^4": degree, then '|'-separated partitions whose
/// parts are written e or e^k.
inline RamificationProfile parse_profile(const std::string& text) {
  RamificationProfile prof;
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ProfileError("expected '<degree>:<partition>|...'");
  auto parse_long = [](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      throw ProfileError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw ProfileError("not an integer: '" + s + "'");
    return v;
  };
  prof.degree = parse_long(text.substr(0, colon));
  std::stringstream branches(text.substr(colon + 1));
  std::string branch;
  while (std::getline(branches, branch, '|')) {
    std::vector<long> part;
    std::stringstream cycles(branch);
    std::string cyc;
    while (std::getline(cycles, cyc, ',')) {
      auto caret = cyc.find('^');
      long e = parse_long(cyc.substr(0, caret));
      long k = caret == std::string::npos ? 1 : parse_long(cyc.substr(caret + 1));
      if (k < 1) throw ProfileError("cycle multiplicity must be positive");
      part.insert(part.end(), static_cast<std::size_t>(k), e);
    }
    if (part.empty()) throw ProfileError("empty partition");
    std::sort(part.rbegin(), part.rend());
    prof.partitions.push_back(std::move(part));
  }
  prof.validate();
  return prof;
}

/// "2^14|3^9,1|7^4" style rendering of partitions.
inline std::string partition_string(const std::vector<long>& part) {
  std::string out;
  for (std::size_t i = 0; i < part.size();) {
    std::size_t j = i;
    while (j < part.size() && part[j] == part[i]) ++j;
    if (!out.empty()) out += ",";
    out += std::to_string(part[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace shimbelyi
