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

// Ratio decomposition of a pair (A, B) and the necessary conditions every
// pair with S_A contained in S_B must satisfy.

#ifndef ZEROSUM_RATIO_H_
#define ZEROSUM_RATIO_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zerosum/sequence.h"
#include "zerosum/solutions.h"

namespace zerosum {

// Indices grouped by the coordinate ratio b_i / a_i. Ratios are listed in
// increasing order; parts[k] holds the 1-based indices with ratio ratios[k].
struct RatioDecomposition {
  std::vector<std::uint32_t> ratios;
  std::vector<SupportSet> parts;
  std::vector<Sequence> subsequences;
  std::vector<ResidueSet> ratio_sets;

  std::size_t d() const noexcept { return ratios.size(); }
};

// B may contain zeros (ratio 0). kLengthMismatch if |B| != l.
RatioDecomposition decompose(const Sequence& a,
                             std::span<const std::uint32_t> b);

struct NecessaryConditionsReport {
  std::size_t d = 0;
  bool has_zero_ratio = false;
  // sum_i (|Sigma_i| - 1)
  std::size_t excess = 0;
  // Sigma_i and -Sigma_j meet only in 0 for all i != j.
  bool sets_meet_only_at_zero = true;
  // l <= excess (d >= 2 only; true when vacuous).
  bool lower_bound_holds = true;
  // excess <= p (d >= 2 only).
  bool upper_bound_holds = true;
  // excess == p implies sum_i lambda_i (|Sigma_i| - 1) == 0.
  bool balanced_when_tight = true;

  bool vacuous() const noexcept { return d < 2; }
  bool all_hold() const noexcept {
    return sets_meet_only_at_zero && lower_bound_holds && upper_bound_holds &&
           balanced_when_tight;
  }
};

// Evaluates the conditions. For l <= 32 the precondition S_A subset of S_B
// is verified and kPreconditionViolated is thrown when it fails.
NecessaryConditionsReport check_necessary_conditions(
    const Sequence& a, std::span<const std::uint32_t> b);

}  // namespace zerosum

#endif  // ZEROSUM_RATIO_H_
