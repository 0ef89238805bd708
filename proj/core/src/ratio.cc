// Copyright 2026 The zerosum Authors
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

#include "zerosum/ratio.h"

#include <algorithm>
#include <map>

#include "zerosum/error.h"

namespace zerosum {

RatioDecomposition decompose(const Sequence& a,
                             std::span<const std::uint32_t> b) {
  if (b.size() != a.length()) {
    throw Error(ErrorCode::kLengthMismatch,
                "B has " + std::to_string(b.size()) + " entries, A has " +
                    std::to_string(a.length()));
  }
  const std::uint32_t p = a.modulus();
  std::map<std::uint32_t, std::uint64_t> groups;
  for (std::size_t i = 0; i < a.length(); ++i) {
    const std::uint32_t ratio = mul_mod(b[i] % p, inverse_mod(a[i], p), p);
    groups[ratio] |= std::uint64_t{1} << i;
  }
  RatioDecomposition out;
  for (const auto& [ratio, bits] : groups) {
    std::vector<std::uint32_t> sub;
    for (std::size_t i = 0; i < a.length(); ++i) {
      if ((bits >> i) & 1u) sub.push_back(a[i]);
    }
    Sequence s(a.prime(), std::move(sub));
    out.ratios.push_back(ratio);
    out.parts.emplace_back(bits, a.length());
    out.ratio_sets.push_back(subsums(s));
    out.subsequences.push_back(std::move(s));
  }
  return out;
}

NecessaryConditionsReport check_necessary_conditions(
    const Sequence& a, std::span<const std::uint32_t> b) {
  if (b.size() != a.length()) {
    throw Error(ErrorCode::kLengthMismatch, "length mismatch");
  }
  if (a.length() <= kMaxDirectLength && !SolutionsSatisfy(a, b)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "S_A is not contained in S_B");
  }
  const RatioDecomposition dec = decompose(a, b);
  const std::uint32_t p = a.modulus();
  NecessaryConditionsReport report;
  report.d = dec.d();
  report.has_zero_ratio = dec.ratios.front() == 0;
  for (const ResidueSet& s : dec.ratio_sets) report.excess += s.size() - 1;
  if (report.vacuous()) return report;

  for (std::size_t i = 0; i < dec.d(); ++i) {
    for (std::size_t j = 0; j < dec.d(); ++j) {
      if (i == j) continue;
      const ResidueSet neg = dec.ratio_sets[j].negated();
      for (std::uint32_t v = 1; v < p; ++v) {
        if (dec.ratio_sets[i].contains(v) && neg.contains(v)) {
          report.sets_meet_only_at_zero = false;
        }
      }
    }
  }
  report.lower_bound_holds = a.length() <= report.excess;
  report.upper_bound_holds = report.excess <= p;
  if (report.excess == p) {
    std::uint32_t weighted = 0;
    for (std::size_t i = 0; i < dec.d(); ++i) {
      const auto size_less_one =
          static_cast<std::uint32_t>((dec.ratio_sets[i].size() - 1) % p);
      weighted = add_mod(weighted, mul_mod(dec.ratios[i], size_less_one, p), p);
    }
    report.balanced_when_tight = weighted == 0;
  }
  return report;
}

}  // namespace zerosum
