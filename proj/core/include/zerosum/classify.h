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

// Structure classification of sequences of length l >= p - 1 and the
// reconstruction problem: which B satisfy S_A subset of S_B, or S_A = S_B.

#ifndef ZEROSUM_CLASSIFY_H_
#define ZEROSUM_CLASSIFY_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "zerosum/fp.h"
#include "zerosum/sequence.h"

namespace zerosum {

// Families, in the order they are tried. Families starting with kZs apply
// to zero-sum sequences of length p - 1.
enum class StructureTag {
  kLongerThanP,    // l > p; dim = l - 1
  kConstant,       // l = p, (r, ..., r); dim = 1
  kExceptionalP,   // l = p, (r^t, (-r)^(p-2-t), -(t+1)r, -(t+1)r); dim = p - 2
  kFullRank,       // l = p otherwise; dim = p - 1
  kZsNearConstant, // (r^(p-2), 2r); dim = 1
  kZsFormII,       // (r^(p-5), -r, 2r, 2r, 2r); dim = p - 4
  kZsFormIII,      // (r^t, (-r)^(p-4-t), 2r, -(t+3)r, -(t+3)r); dim = p - 3
  kZsFormIV,       // (r^t, (-r)^(p-3-t), -(t+1)r, -(t+2)r); dim = p - 3
  kZsSporadic7,    // p = 7, (-1, 1, -2, 2, -3, 3); dim = 4
  kZsFullRank,     // zero-sum otherwise; dim = p - 2
  kNonZeroSum,     // l = p - 1, sigma(A) != 0; classified through A'
};

std::string_view StructureTagName(StructureTag tag);

struct StructureClass {
  StructureTag tag;
  std::optional<std::size_t> t;
  std::optional<std::uint32_t> r;
  // 0-based sigma with (a_sigma(0), ..., a_sigma(l-1)) equal to the family
  // pattern; identity for families without a pattern.
  std::vector<std::size_t> witness;
  std::size_t predicted_dim = 0;
  // For kNonZeroSum: the class of A' = (A, -sigma(A)).
  std::shared_ptr<const StructureClass> lifted;

  // "NonZeroSum(ExceptionalP)" for lifted classes, the tag name otherwise.
  std::string DisplayName() const;
};

// kUnsupportedLength for l < p - 1.
StructureClass classify(const Sequence& a);

// The family's pattern with parameters t and r, in the order the family is
// written. Throws kInvalidArgument when (t, r) is outside the family's
// range or the tag has no pattern.
std::vector<std::uint32_t> FamilyPattern(StructureTag tag, Prime p,
                                         std::size_t t, std::uint32_t r);

// True iff some permutation of A equals FamilyPattern(tag, p, t, r) for
// some r.
bool MatchesFamily(const Sequence& a, StructureTag tag, std::size_t t);

// lambda with B = lambda * A, if any. kLengthMismatch on unequal lengths.
std::optional<Residue> collinear(const Sequence& a, const Sequence& b);

// True iff S_A = S_B. Both lengths must be <= 32.
bool SameSolutions(const Sequence& a, const Sequence& b);

// Projective class representative: the lambda * B whose sorted entries are
// lex-least, ties broken by the lex-least positional vector. Entry positions
// are preserved and every nonzero multiple of B has the same representative.
Sequence ProjectiveRepresentative(const Sequence& b);

enum class ReconstructionMode { kSuperset, kEqual };

inline constexpr std::size_t kMaxAnnihilatorDim = 5;

struct ReconstructionResult {
  ReconstructionMode mode;
  // Projective representatives, sorted lexicographically.
  std::vector<Sequence> classes;
  bool includes_collinear = false;
};

// Sweeps the projective points of <S_A>^perp. kTooLong for l > 32,
// kBudgetExceeded when l - dim(A) > kMaxAnnihilatorDim.
ReconstructionResult reconstruct(const Sequence& a, ReconstructionMode mode);

// The three non-collinear shapes a pair with S_A = S_B may take at
// l = p - 1.
enum class PairForm { kNearConstantSwap, kFormIVSwap, kSporadic7 };

std::string_view PairFormName(PairForm form);

// Matches (A, B) against the pair shapes up to a common permutation.
std::optional<PairForm> MatchPairForm(const Sequence& a, const Sequence& b);

}  // namespace zerosum

#endif  // ZEROSUM_CLASSIFY_H_
