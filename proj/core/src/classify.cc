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

#include "zerosum/classify.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <utility>

#include "zerosum/error.h"
#include "zerosum/solutions.h"

namespace zerosum {

namespace {

struct ParamRange {
  std::size_t lo;
  std::size_t hi;
};

// Range of t for a family at modulus p; nullopt when the family is empty.
std::optional<ParamRange> TRange(StructureTag tag, std::uint32_t p) {
  switch (tag) {
    case StructureTag::kConstant:
    case StructureTag::kZsNearConstant:
      return ParamRange{0, 0};
    case StructureTag::kExceptionalP:
      if (p < 5) return std::nullopt;
      return ParamRange{1, p - 3};
    case StructureTag::kZsFormII:
      if (p < 5) return std::nullopt;
      return ParamRange{0, 0};
    case StructureTag::kZsFormIII:
      if (p < 7) return std::nullopt;
      return ParamRange{0, p - 6};
    case StructureTag::kZsFormIV:
      if (p < 5) return std::nullopt;
      return ParamRange{1, p - 4};
    case StructureTag::kZsSporadic7:
      if (p != 7) return std::nullopt;
      return ParamRange{0, 0};
    default:
      return std::nullopt;
  }
}

bool HasParameterT(StructureTag tag) {
  return tag == StructureTag::kExceptionalP ||
         tag == StructureTag::kZsFormIII || tag == StructureTag::kZsFormIV;
}

std::uint32_t Neg(std::uint32_t v, std::uint32_t p) {
  return v == 0 ? 0 : p - v;
}

// c * r mod p for a possibly negative integer c.
std::uint32_t Times(std::int64_t c, std::uint32_t r, std::uint32_t p) {
  return mul_mod(Residue(c, Prime(p)).value(), r, p);
}

std::vector<std::uint32_t> BuildPattern(StructureTag tag, std::uint32_t p,
                                        std::size_t t, std::uint32_t r) {
  std::vector<std::uint32_t> out;
  auto repeat = [&](std::uint32_t v, std::size_t n) {
    out.insert(out.end(), n, v);
  };
  const auto ti = static_cast<std::int64_t>(t);
  switch (tag) {
    case StructureTag::kConstant:
      repeat(r, p);
      break;
    case StructureTag::kExceptionalP:
      repeat(r, t);
      repeat(Neg(r, p), p - 2 - t);
      repeat(Times(-(ti + 1), r, p), 2);
      break;
    case StructureTag::kZsNearConstant:
      repeat(r, p - 2);
      repeat(Times(2, r, p), 1);
      break;
    case StructureTag::kZsFormII:
      repeat(r, p - 5);
      repeat(Neg(r, p), 1);
      repeat(Times(2, r, p), 3);
      break;
    case StructureTag::kZsFormIII:
      repeat(r, t);
      repeat(Neg(r, p), p - 4 - t);
      repeat(Times(2, r, p), 1);
      repeat(Times(-(ti + 3), r, p), 2);
      break;
    case StructureTag::kZsFormIV:
      repeat(r, t);
      repeat(Neg(r, p), p - 3 - t);
      repeat(Times(-(ti + 1), r, p), 1);
      repeat(Times(-(ti + 2), r, p), 1);
      break;
    case StructureTag::kZsSporadic7:
      out = {6, 1, 5, 2, 4, 3};
      break;
    default:
      break;
  }
  return out;
}

std::vector<std::size_t> Identity(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return id;
}

std::size_t PredictedDim(StructureTag tag, std::size_t length,
                         std::uint32_t p) {
  switch (tag) {
    case StructureTag::kLongerThanP:
      return length - 1;
    case StructureTag::kConstant:
    case StructureTag::kZsNearConstant:
      return 1;
    case StructureTag::kExceptionalP:
      return p - 2;
    case StructureTag::kFullRank:
      return p - 1;
    case StructureTag::kZsFormII:
      return p - 4;
    case StructureTag::kZsFormIII:
    case StructureTag::kZsFormIV:
      return p - 3;
    case StructureTag::kZsSporadic7:
      return 4;
    case StructureTag::kZsFullRank:
      return p - 2;
    case StructureTag::kNonZeroSum:
      break;
  }
  return 0;
}

// First (r, t) in (r, t) order for which A is a permutation of the family
// pattern, together with the witness permutation.
std::optional<StructureClass> TryFamily(const Sequence& a,
                                        StructureTag tag) {
  const std::uint32_t p = a.modulus();
  const auto range = TRange(tag, p);
  if (!range) return std::nullopt;
  std::vector<std::size_t> count(p, 0);
  for (std::uint32_t v : a.entries()) ++count[v];
  std::vector<std::size_t> pattern_count(p, 0);
  const std::uint32_t r_max = tag == StructureTag::kZsSporadic7 ? 1 : p - 1;
  for (std::uint32_t r = 1; r <= r_max; ++r) {
    for (std::size_t t = range->lo; t <= range->hi; ++t) {
      const std::vector<std::uint32_t> pattern = BuildPattern(tag, p, t, r);
      if (pattern.size() != a.length()) continue;
      std::fill(pattern_count.begin(), pattern_count.end(), 0);
      for (std::uint32_t v : pattern) ++pattern_count[v];
      if (pattern_count != count) continue;

      std::vector<std::deque<std::size_t>> positions(p);
      for (std::size_t i = 0; i < a.length(); ++i) {
        positions[a[i]].push_back(i);
      }
      StructureClass cls;
      cls.tag = tag;
      if (HasParameterT(tag)) cls.t = t;
      if (tag != StructureTag::kZsSporadic7) cls.r = r;
      for (std::uint32_t v : pattern) {
        cls.witness.push_back(positions[v].front());
        positions[v].pop_front();
      }
      cls.predicted_dim = PredictedDim(tag, a.length(), p);
      return cls;
    }
  }
  return std::nullopt;
}

StructureClass Plain(StructureTag tag, const Sequence& a) {
  StructureClass cls;
  cls.tag = tag;
  cls.witness = Identity(a.length());
  cls.predicted_dim = PredictedDim(tag, a.length(), a.modulus());
  return cls;
}

}  // namespace

std::string_view StructureTagName(StructureTag tag) {
  switch (tag) {
    case StructureTag::kLongerThanP:
      return "LongerThanP";
    case StructureTag::kConstant:
      return "Constant";
    case StructureTag::kExceptionalP:
      return "ExceptionalP";
    case StructureTag::kFullRank:
      return "FullRank";
    case StructureTag::kZsNearConstant:
      return "ZS_NearConstant";
    case StructureTag::kZsFormII:
      return "ZS_FormII";
    case StructureTag::kZsFormIII:
      return "ZS_FormIII";
    case StructureTag::kZsFormIV:
      return "ZS_FormIV";
    case StructureTag::kZsSporadic7:
      return "ZS_Sporadic7";
    case StructureTag::kZsFullRank:
      return "ZS_FullRank";
    case StructureTag::kNonZeroSum:
      return "NonZeroSum";
  }
  return "Unknown";
}

std::string StructureClass::DisplayName() const {
  std::string name(StructureTagName(tag));
  if (lifted) name += "(" + lifted->DisplayName() + ")";
  return name;
}

std::vector<std::uint32_t> FamilyPattern(StructureTag tag, Prime p,
                                         std::size_t t, std::uint32_t r) {
  const auto range = TRange(tag, p.value());
  if (!range || t < range->lo || t > range->hi || r == 0 ||
      r >= p.value() || (tag == StructureTag::kZsSporadic7 && r != 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(StructureTagName(tag)) +
                    ": parameters outside the family's range");
  }
  return BuildPattern(tag, p.value(), t, r);
}

bool MatchesFamily(const Sequence& a, StructureTag tag, std::size_t t) {
  const std::uint32_t p = a.modulus();
  const auto range = TRange(tag, p);
  if (!range || t < range->lo || t > range->hi) return false;
  std::vector<std::uint32_t> sorted = a.entries();
  std::sort(sorted.begin(), sorted.end());
  const std::uint32_t r_max = tag == StructureTag::kZsSporadic7 ? 1 : p - 1;
  for (std::uint32_t r = 1; r <= r_max; ++r) {
    std::vector<std::uint32_t> pattern = BuildPattern(tag, p, t, r);
    std::sort(pattern.begin(), pattern.end());
    if (pattern == sorted) return true;
  }
  return false;
}

StructureClass classify(const Sequence& a) {
  const std::uint32_t p = a.modulus();
  const std::size_t n = a.length();
  if (n > p) return Plain(StructureTag::kLongerThanP, a);
  if (n + 1 < p) {
    throw Error(ErrorCode::kUnsupportedLength,
                "classification needs l >= p - 1; got l = " +
                    std::to_string(n) + ", p = " + std::to_string(p));
  }
  if (n == p) {
    for (StructureTag tag :
         {StructureTag::kConstant, StructureTag::kExceptionalP}) {
      if (auto cls = TryFamily(a, tag)) return *cls;
    }
    return Plain(StructureTag::kFullRank, a);
  }
  if (a.is_zero_sum()) {
    for (StructureTag tag :
         {StructureTag::kZsNearConstant, StructureTag::kZsFormII,
          StructureTag::kZsFormIII, StructureTag::kZsFormIV,
          StructureTag::kZsSporadic7}) {
      if (auto cls = TryFamily(a, tag)) return *cls;
    }
    return Plain(StructureTag::kZsFullRank, a);
  }
  auto lifted =
      std::make_shared<const StructureClass>(classify(a.appended(-a.sum())));
  StructureClass cls = Plain(StructureTag::kNonZeroSum, a);
  cls.t = lifted->t;
  cls.r = lifted->r;
  cls.predicted_dim = lifted->predicted_dim - 1;
  cls.lifted = std::move(lifted);
  return cls;
}

std::optional<Residue> collinear(const Sequence& a, const Sequence& b) {
  if (a.length() != b.length()) {
    throw Error(ErrorCode::kLengthMismatch, "sequences differ in length");
  }
  if (a.prime() != b.prime()) {
    throw Error(ErrorCode::kInvalidArgument, "modulus mismatch");
  }
  const std::uint32_t p = a.modulus();
  const std::uint32_t lambda = mul_mod(b[0], inverse_mod(a[0], p), p);
  for (std::size_t i = 1; i < a.length(); ++i) {
    if (mul_mod(a[i], lambda, p) != b[i]) return std::nullopt;
  }
  return Residue(lambda, a.prime());
}

bool SameSolutions(const Sequence& a, const Sequence& b) {
  if (a.length() != b.length()) {
    throw Error(ErrorCode::kLengthMismatch, "sequences differ in length");
  }
  return SolutionsSatisfy(a, b.entries()) && SolutionsSatisfy(b, a.entries());
}

Sequence ProjectiveRepresentative(const Sequence& b) {
  // Ties on the sorted multiset are broken by the positional vector, so
  // every multiple of b yields the same representative.
  const std::uint32_t p = b.modulus();
  std::vector<std::uint32_t> best_sorted, best, scaled;
  for (std::uint32_t lambda = 1; lambda < p; ++lambda) {
    scaled.clear();
    for (std::uint32_t v : b.entries()) scaled.push_back(mul_mod(v, lambda, p));
    std::vector<std::uint32_t> sorted = scaled;
    std::sort(sorted.begin(), sorted.end());
    if (best.empty() || sorted < best_sorted ||
        (sorted == best_sorted && scaled < best)) {
      best_sorted = std::move(sorted);
      best = scaled;
    }
  }
  return Sequence(b.prime(), std::move(best));
}

ReconstructionResult reconstruct(const Sequence& a, ReconstructionMode mode) {
  if (a.length() > kMaxDirectLength) {
    throw Error(ErrorCode::kTooLong, "reconstruction needs l <= 32");
  }
  const std::uint32_t p = a.modulus();
  const std::size_t n = a.length();
  FpMatrix span(a.prime(), n);
  for (std::uint64_t m : SolutionSpanBasis(a)) span.add_indicator_row(m);
  const FpMatrix annihilator = nullspace_basis(span);
  const std::size_t k = annihilator.num_rows();
  if (k > kMaxAnnihilatorDim) {
    throw Error(ErrorCode::kBudgetExceeded,
                "annihilator dimension " + std::to_string(k) +
                    " exceeds the sweep budget of " +
                    std::to_string(kMaxAnnihilatorDim));
  }

  ReconstructionResult result{mode, {}, false};
  // Projective points: coefficient vectors whose first nonzero entry is 1.
  std::vector<std::uint32_t> coeff(k, 0);
  std::vector<std::uint32_t> b(n);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(coeff.begin(), coeff.end(), 0);
    coeff[lead] = 1;
    while (true) {
      std::fill(b.begin(), b.end(), 0);
      for (std::size_t j = lead; j < k; ++j) {
        if (coeff[j] == 0) continue;
        const auto& row = annihilator.row(j);
        for (std::size_t i = 0; i < n; ++i) {
          b[i] = add_mod(b[i], mul_mod(coeff[j], row[i], p), p);
        }
      }
      const bool nonzero =
          std::none_of(b.begin(), b.end(), [](auto v) { return v == 0; });
      if (nonzero) {
        Sequence candidate(a.prime(), b);
        if (mode == ReconstructionMode::kSuperset ||
            SolutionsSatisfy(candidate, a.entries())) {
          result.classes.push_back(ProjectiveRepresentative(candidate));
        }
      }
      // Odometer over the coordinates after the leading one.
      std::size_t j = lead + 1;
      while (j < k && ++coeff[j] == p) coeff[j++] = 0;
      if (j == k) break;
    }
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const Sequence& x, const Sequence& y) {
              return x.entries() < y.entries();
            });
  const Sequence self = ProjectiveRepresentative(a);
  result.includes_collinear =
      std::find(result.classes.begin(), result.classes.end(), self) !=
      result.classes.end();
  return result;
}

std::string_view PairFormName(PairForm form) {
  switch (form) {
    case PairForm::kNearConstantSwap:
      return "NearConstantSwap";
    case PairForm::kFormIVSwap:
      return "FormIVSwap";
    case PairForm::kSporadic7:
      return "Sporadic7";
  }
  return "Unknown";
}

std::optional<PairForm> MatchPairForm(const Sequence& a, const Sequence& b) {
  const std::uint32_t p = a.modulus();
  if (a.length() != b.length() || a.length() + 1 != p ||
      a.prime() != b.prime()) {
    return std::nullopt;
  }
  using Pair = std::pair<std::uint32_t, std::uint32_t>;
  std::vector<Pair> actual;
  for (std::size_t i = 0; i < a.length(); ++i) actual.emplace_back(a[i], b[i]);
  std::sort(actual.begin(), actual.end());

  std::vector<Pair> shape;
  auto add = [&](std::int64_t ca, std::uint32_t r, std::int64_t cb,
                 std::uint32_t lr, std::size_t times) {
    shape.insert(shape.end(), times, Pair{Times(ca, r, p), Times(cb, lr, p)});
  };
  auto matches = [&]() {
    std::sort(shape.begin(), shape.end());
    const bool eq = shape == actual;
    shape.clear();
    return eq;
  };
  for (std::uint32_t r = 1; r < p; ++r) {
    for (std::uint32_t lambda = 1; lambda < p; ++lambda) {
      const std::uint32_t lr = mul_mod(lambda, r, p);
      add(1, r, 1, lr, p - 3);
      add(1, r, 2, lr, 1);
      add(2, r, 1, lr, 1);
      if (matches()) return PairForm::kNearConstantSwap;
      for (std::size_t t = 1; t + 4 <= p; ++t) {
        const auto ti = static_cast<std::int64_t>(t);
        add(1, r, 1, lr, t);
        add(-1, r, -1, lr, p - 3 - t);
        add(-(ti + 1), r, -(ti + 2), lr, 1);
        add(-(ti + 2), r, -(ti + 1), lr, 1);
        if (matches()) return PairForm::kFormIVSwap;
      }
    }
  }
  if (p == 7) {
    for (std::uint32_t lambda = 1; lambda < p; ++lambda) {
      add(-1, 1, -1, lambda, 1);
      add(1, 1, 1, lambda, 1);
      add(-2, 1, 3, lambda, 1);
      add(2, 1, -3, lambda, 1);
      add(-3, 1, 2, lambda, 1);
      add(3, 1, -2, lambda, 1);
      if (matches()) return PairForm::kSporadic7;
    }
  }
  return std::nullopt;
}

}  // namespace zerosum
