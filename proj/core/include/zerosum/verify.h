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

// Exhaustive, shardable sweeps over canonical sequences that cross-check
// the structure theorems against brute force.

#ifndef ZEROSUM_VERIFY_H_
#define ZEROSUM_VERIFY_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zerosum/fp.h"
#include "zerosum/sequence.h"

namespace zerosum {

enum class Check {
  kDimTheorems,
  kMinimalCounts,
  kReconstruction,
  kSumsetLemmas,
  kAffine,
  kExceptional,
};

inline constexpr Check kAllChecks[] = {
    Check::kDimTheorems, Check::kMinimalCounts, Check::kReconstruction,
    Check::kSumsetLemmas, Check::kAffine,       Check::kExceptional,
};

std::string_view CheckName(Check check);
std::optional<Check> ParseCheck(std::string_view name);

inline constexpr std::uint32_t kMaxSweepPrime = 17;
inline constexpr std::size_t kMaxSweepLength = 24;
inline constexpr std::size_t kMaxFailuresPerCheck = 100;
// Sweeps whose estimated work (orbits * 2^l) exceeds this need allow_large.
inline constexpr double kLargeSweepWork = 1e9;

struct Shard {
  std::uint64_t index = 0;
  std::uint64_t total = 1;
};

struct SweepSpec {
  Prime p;
  std::size_t length;
  SumFilter filter = SumFilter::kAll;
  std::vector<Check> checks;
  Shard shard;
  bool allow_large = false;
};

// kInvalidArgument on a malformed spec; kBudgetExceeded when the sweep is
// large and allow_large is unset.
void ValidateSweepSpec(const SweepSpec& spec);

double EstimatedSweepWork(Prime p, std::size_t length);

struct Failure {
  Sequence sequence;
  Check check;
  std::string expected;
  std::string got;
  // Colex rank of the sequence's multiset in the enumeration.
  std::uint64_t rank = 0;
};

struct CheckTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t skipped = 0;

  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

// Named event counts gathered while checking (class census, lemma branches
// exercised, reconstruction shapes seen).
using Counters = std::map<std::string, std::uint64_t>;

struct VerificationReport {
  explicit VerificationReport(SweepSpec s) : spec(std::move(s)) {}

  SweepSpec spec;
  std::uint64_t sequences_checked = 0;
  std::vector<Failure> failures;
  std::chrono::milliseconds elapsed{0};
  std::map<Check, CheckTally> tallies;
  Counters counters;

  bool verified() const noexcept { return failures.empty(); }
};

// Runs one check on one sequence. Used by the sweep and for replaying a
// recorded failure. Returns the failures found (empty on success); the
// tally and counters are updated when given.
std::vector<Failure> CheckSequence(const Sequence& a, Check check,
                                   CheckTally* tally = nullptr,
                                   Counters* counters = nullptr);

// Worker count: ZEROSUM_THREADS if set and positive, else the hardware
// concurrency (at least 1).
unsigned DefaultThreadCount();

// threads == 0 uses DefaultThreadCount().
VerificationReport RunSweep(const SweepSpec& spec, unsigned threads = 0);

VerificationReport verify_dim_theorems(SweepSpec spec);
VerificationReport verify_minimal_counts(SweepSpec spec);
VerificationReport verify_reconstruction(SweepSpec spec);
VerificationReport verify_sumset_lemmas(SweepSpec spec);
VerificationReport verify_affine(SweepSpec spec);
VerificationReport verify_exceptional(SweepSpec spec);

}  // namespace zerosum

#endif  // ZEROSUM_VERIFY_H_
