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

#include "zerosum/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>

#include "zerosum/classify.h"
#include "zerosum/error.h"
#include "zerosum/ratio.h"
#include "zerosum/solutions.h"

namespace zerosum {

namespace {

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::string Str(std::uint64_t v) { return std::to_string(v); }

std::string ProfileString(const MultiplicityProfile& profile) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.multiplicities.size(); ++i) {
    if (i > 0) out += ",";
    out += Str(profile.multiplicities[i]);
  }
  return out + ")";
}

std::string ClassesString(const std::vector<Sequence>& classes) {
  std::string out = "[";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) out += " ";
    out += classes[i].ToString();
  }
  return out + "]";
}

// Lazily computed facts about one sequence, shared by all checks run on it.
class Context {
 public:
  explicit Context(const Sequence& a) : a_(a) {}

  const Sequence& seq() const { return a_; }
  std::size_t length() const { return a_.length(); }
  std::uint32_t p() const { return a_.modulus(); }

  std::size_t dim() {
    if (!dim_) dim_ = solution_dim(a_);
    return *dim_;
  }
  const StructureClass& cls() {
    if (!cls_) cls_ = classify(a_);
    return *cls_;
  }
  const SolutionSet& solutions() {
    if (!solutions_) solutions_ = enumerate_solutions(a_, Residue(0, a_.prime()));
    return *solutions_;
  }
  std::size_t minimal_count() {
    if (!minimal_count_) minimal_count_ = minimal_solutions(solutions()).size();
    return *minimal_count_;
  }

 private:
  const Sequence& a_;
  std::optional<std::size_t> dim_;
  std::optional<StructureClass> cls_;
  std::optional<SolutionSet> solutions_;
  std::optional<std::size_t> minimal_count_;
};

class Recorder {
 public:
  Recorder(const Sequence& a, Check check, CheckTally& tally,
           std::vector<Failure>& failures)
      : a_(a), check_(check), tally_(tally), failures_(failures) {}

  void Expect(bool ok, std::string expected, std::string got) {
    if (ok) return;
    failed_ = true;
    failures_.push_back(Failure{a_, check_, std::move(expected),
                                std::move(got), 0});
  }
  void NotApplicable() { not_applicable_ = true; }
  void Skipped() { skipped_ = true; }

  ~Recorder() {
    if (failed_) {
      ++tally_.failed;
    } else if (skipped_) {
      ++tally_.skipped;
    } else if (not_applicable_) {
      ++tally_.not_applicable;
    } else {
      ++tally_.passed;
    }
  }

 private:
  const Sequence& a_;
  Check check_;
  CheckTally& tally_;
  std::vector<Failure>& failures_;
  bool failed_ = false;
  bool not_applicable_ = false;
  bool skipped_ = false;
};

void CheckDimTheorems(Context& ctx, Recorder& rec, Counters& counters) {
  const Sequence& a = ctx.seq();
  const std::size_t n = ctx.length();
  const std::uint32_t p = ctx.p();
  bool applied = false;
  if (n + 1 >= p) {
    applied = true;
    const StructureClass& cls = ctx.cls();
    ++counters["tag:" + cls.DisplayName()];
    rec.Expect(ctx.dim() == cls.predicted_dim,
               "dim " + Str(cls.predicted_dim) + " (" + cls.DisplayName() +
                   ")",
               "dim " + Str(ctx.dim()));
    rec.Expect(ctx.dim() + 1 <= std::max<std::size_t>(n, 1),
               "dim <= l-1", "dim " + Str(ctx.dim()));
  }
  // dim(A') = dim(A) + 1 for A' = (A, -sigma(A)) whenever sigma(A) != 0.
  if (!a.is_zero_sum() && n + 1 <= kMaxDirectLength) {
    applied = true;
    const std::size_t lifted = solution_dim(a.appended(-a.sum()));
    rec.Expect(lifted == ctx.dim() + 1, "dim(A') " + Str(ctx.dim() + 1),
               "dim(A') " + Str(lifted));
  }
  if (!applied) rec.NotApplicable();
}

void CheckMinimalCounts(Context& ctx, Recorder& rec, Counters& counters) {
  const Sequence& a = ctx.seq();
  const std::size_t n = ctx.length();
  const std::uint32_t p = ctx.p();
  if (n + 1 < p) {
    rec.NotApplicable();
    return;
  }
  const std::size_t count = ctx.minimal_count();
  // Minimal elements span <S_A>.
  rec.Expect(count >= ctx.dim(), ">= dim " + Str(ctx.dim()),
             "count " + Str(count));
  if (n > p) {
    rec.Expect(count + 1 >= n, ">= " + Str(n - 1), "count " + Str(count));
    return;
  }
  const StructureClass& cls = ctx.cls();
  if (n == p) {
    if (a.is_constant()) {
      rec.NotApplicable();
      return;
    }
    rec.Expect(count + 1 >= p, ">= " + Str(p - 1), "count " + Str(count));
    if (cls.tag == StructureTag::kExceptionalP) {
      const std::size_t t = *cls.t;
      const std::uint64_t m = std::min<std::size_t>(t, p - 2 - t);
      const std::uint64_t big = std::max<std::size_t>(t, p - 2 - t);
      const std::uint64_t formula = m * big + Binomial(big, m);
      rec.Expect(count == formula, "mM+C(M,m) = " + Str(formula),
                 "count " + Str(count));
      if (t == 1 || t == p - 3) {
        rec.Expect(count == 2 * (p - 3), "exactly " + Str(2 * (p - 3)),
                   "count " + Str(count));
        ++counters["minimal:exceptional_t_edge_exact"];
      }
    }
    return;
  }
  // l = p - 1: constant sequences and (r, ..., r, 2r) are excluded.
  if (a.is_constant() || cls.tag == StructureTag::kZsNearConstant) {
    rec.NotApplicable();
    return;
  }
  rec.Expect(count + 3 >= p, ">= " + Str(p - 3), "count " + Str(count));
  if (cls.tag == StructureTag::kZsFormII && p >= 7) {
    rec.Expect(count == 2 * (p - 5), "exactly " + Str(2 * (p - 5)),
               "count " + Str(count));
  }
}

void CheckReconstruction(Context& ctx, Recorder& rec, Counters& counters) {
  const Sequence& a = ctx.seq();
  const std::size_t n = ctx.length();
  const std::uint32_t p = ctx.p();
  if (n + 1 < p) {
    rec.NotApplicable();
    return;
  }
  ReconstructionResult superset;
  try {
    superset = reconstruct(a, ReconstructionMode::kSuperset);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    ++counters["reconstruction:budget_skipped"];
    rec.Skipped();
    return;
  }
  const Sequence self = ProjectiveRepresentative(a);
  rec.Expect(superset.includes_collinear, "collinear class present",
             ClassesString(superset.classes));

  for (const Sequence& b : superset.classes) {
    const NecessaryConditionsReport report =
        check_necessary_conditions(a, b.entries());
    ++counters["ratio:pairs_checked"];
    if (!report.vacuous()) ++counters["ratio:pairs_with_d>=2"];
    rec.Expect(report.all_hold(), "ratio conditions hold",
               "violated for B=" + b.ToString());
  }

  if (n > p) {
    rec.Expect(superset.classes == std::vector<Sequence>{self},
               "only " + self.ToString(), ClassesString(superset.classes));
    return;
  }
  std::vector<Sequence> equal;
  for (const Sequence& b : superset.classes) {
    if (SolutionsSatisfy(b, a.entries())) equal.push_back(b);
  }
  if (n == p) {
    rec.Expect(equal == std::vector<Sequence>{self}, "only " + self.ToString(),
               ClassesString(equal));
    return;
  }
  for (const Sequence& b : equal) {
    if (b == self) continue;
    const auto form = MatchPairForm(a, b);
    rec.Expect(form.has_value(), "collinear or a known pair shape",
               "B=" + b.ToString());
    if (form) ++counters["pair_form:" + std::string(PairFormName(*form))];
  }
}

void CheckSumsetLemmas(Context& ctx, Recorder& rec, Counters& counters) {
  const Sequence& a = ctx.seq();
  const std::size_t n = ctx.length();
  const std::uint32_t p = ctx.p();

  // Sigma of each prefix; each step adds {0, a_k}.
  std::vector<std::uint8_t> cur(p, 0), next;
  cur[0] = 1;
  std::size_t prev_size = 1;
  for (std::size_t k = 0; k < n; ++k) {
    next = cur;
    for (std::uint32_t v = 0; v < p; ++v) {
      if (cur[v]) next[add_mod(v, a[k], p)] = 1;
    }
    cur.swap(next);
    const auto size = static_cast<std::size_t>(
        std::count(cur.begin(), cur.end(), std::uint8_t{1}));
    const std::size_t bound = std::min<std::size_t>(p, prev_size + 1);
    rec.Expect(size >= bound,
               "|Sigma(prefix " + Str(k + 1) + ")| >= " + Str(bound),
               Str(size));
    prev_size = size;
  }
  const std::size_t size = subsums(a).size();
  rec.Expect(size == prev_size, "subsums agree with prefix walk",
             Str(size) + " vs " + Str(prev_size));
  rec.Expect(size >= std::min<std::size_t>(p, n + 1),
             ">= min(p, l+1) = " + Str(std::min<std::size_t>(p, n + 1)),
             Str(size));
  const MultiplicityProfile profile = multiplicity_profile(a);
  const std::size_t thb = thb_lower_bound(profile, a.prime());
  rec.Expect(size >= thb, ">= " + Str(thb) + " for profile " +
                              ProfileString(profile),
             Str(size));

  if (size == n + 1 && size < p) {
    ++counters["sumset:small_sigma_l+1"];
    rec.Expect(profile.multiplicities == std::vector<std::size_t>{n},
               "profile (" + Str(n) + ")", ProfileString(profile));
  }
  if (size == n + 2 && size < p) {
    if (n == 2) {
      ++counters["sumset:small_sigma_l+2_l=2_branch"];
    } else {
      ++counters["sumset:small_sigma_l+2"];
      const bool shape =
          profile.multiplicities == std::vector<std::size_t>{n - 1, 1};
      rec.Expect(shape, "profile (" + Str(n - 1) + ",1)",
                 ProfileString(profile));
      if (shape) {
        // Majority pair {+-r}; the remaining entry must be +-2r.
        std::vector<std::size_t> pair_count(p, 0);
        for (std::uint32_t v : a.entries()) ++pair_count[std::min(v, p - v)];
        std::uint32_t r = 0, odd = 0;
        for (std::uint32_t v = 1; v < p; ++v) {
          if (pair_count[v] == n - 1) r = v;
        }
        for (std::uint32_t v : a.entries()) {
          if (std::min(v, p - v) != r) odd = v;
        }
        const std::uint32_t two_r = mul_mod(2, r, p);
        rec.Expect(odd == two_r || odd == p - two_r,
                   "odd entry in {+-" + Str(two_r) + "}", Str(odd));
      }
    }
  }
}

void CheckAffine(Context& ctx, Recorder& rec, Counters& counters) {
  const Sequence& a = ctx.seq();
  const std::size_t n = ctx.length();
  const std::uint32_t p = ctx.p();
  if (n + 1 < p) {
    rec.NotApplicable();
    return;
  }
  for (std::uint32_t alpha = 0; alpha < p; ++alpha) {
    const Residue target(alpha, a.prime());
    const auto reduction = affine_reduce(a, target);
    rec.Expect(reduction.has_value(), "subset hitting " + Str(alpha),
               "none");
    if (!reduction) continue;
    const std::size_t lhs = affine_dim(a, target);
    const std::size_t rhs = solution_dim(reduction->reduced);
    rec.Expect(lhs == rhs, "dim(A," + Str(alpha) + ") = dim(A_I) = " + Str(rhs),
               Str(lhs));
    ++counters["affine:alpha_checked"];
    if (n <= 16) {
      std::vector<std::uint64_t> image, direct;
      ForEachSolution(a, alpha, [&](std::uint64_t x) {
        image.push_back(reduction->flip(x));
        return true;
      });
      ForEachSolution(reduction->reduced, 0, [&](std::uint64_t y) {
        direct.push_back(y);
        return true;
      });
      std::sort(image.begin(), image.end());
      std::sort(direct.begin(), direct.end());
      rec.Expect(image == direct, "flip(S_A^alpha) = S_{A_I}",
                 Str(image.size()) + " vs " + Str(direct.size()) +
                     " members");
    }
  }
}

void CheckExceptional(Context& ctx, Recorder& rec, Counters& counters) {
  const Sequence& a = ctx.seq();
  const std::size_t n = ctx.length();
  const std::uint32_t p = ctx.p();
  bool expected = false;
  if (n > p) {
    expected = false;
  } else if (n == p) {
    const StructureTag tag = ctx.cls().tag;
    expected = tag == StructureTag::kConstant ||
               tag == StructureTag::kExceptionalP;
  } else if (n + 1 == p && a.is_zero_sum()) {
    const StructureTag tag = ctx.cls().tag;
    expected = tag == StructureTag::kZsNearConstant ||
               tag == StructureTag::kZsFormII ||
               tag == StructureTag::kZsFormIII ||
               tag == StructureTag::kZsFormIV;
  } else {
    rec.NotApplicable();
    return;
  }
  const bool exceptional = !exceptional_pairs(a).empty();
  if (exceptional) ++counters["exceptional:count"];
  rec.Expect(exceptional == expected,
             expected ? "exceptional" : "regular",
             exceptional ? "exceptional" : "regular");
}

void RunCheck(Context& ctx, Check check, CheckTally& tally,
              Counters& counters, std::vector<Failure>& failures) {
  Recorder rec(ctx.seq(), check, tally, failures);
  switch (check) {
    case Check::kDimTheorems:
      CheckDimTheorems(ctx, rec, counters);
      break;
    case Check::kMinimalCounts:
      CheckMinimalCounts(ctx, rec, counters);
      break;
    case Check::kReconstruction:
      CheckReconstruction(ctx, rec, counters);
      break;
    case Check::kSumsetLemmas:
      CheckSumsetLemmas(ctx, rec, counters);
      break;
    case Check::kAffine:
      CheckAffine(ctx, rec, counters);
      break;
    case Check::kExceptional:
      CheckExceptional(ctx, rec, counters);
      break;
  }
}

struct WorkerResult {
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  std::map<Check, CheckTally> tallies;
  Counters counters;
};

void RunWorker(const SweepSpec& spec, std::uint64_t offset,
               std::uint64_t stride, WorkerResult& out) {
  CanonicalEnumerator it(spec.p, spec.length, spec.filter, offset, stride);
  std::map<Check, std::size_t> kept;
  while (auto seq = it.next()) {
    ++out.checked;
    Context ctx(*seq);
    for (Check check : spec.checks) {
      std::vector<Failure> found;
      RunCheck(ctx, check, out.tallies[check], out.counters, found);
      for (Failure& f : found) {
        if (kept[check] == kMaxFailuresPerCheck) break;
        ++kept[check];
        f.rank = it.last_rank();
        out.failures.push_back(std::move(f));
      }
    }
  }
}

VerificationReport SingleCheckSweep(SweepSpec spec, Check check) {
  spec.checks = {check};
  return RunSweep(spec);
}

}  // namespace

std::string_view CheckName(Check check) {
  switch (check) {
    case Check::kDimTheorems:
      return "dim_theorems";
    case Check::kMinimalCounts:
      return "minimal_counts";
    case Check::kReconstruction:
      return "reconstruction";
    case Check::kSumsetLemmas:
      return "sumset_lemmas";
    case Check::kAffine:
      return "affine";
    case Check::kExceptional:
      return "exceptional";
  }
  return "unknown";
}

std::optional<Check> ParseCheck(std::string_view name) {
  for (Check c : kAllChecks) {
    if (CheckName(c) == name) return c;
  }
  return std::nullopt;
}

double EstimatedSweepWork(Prime p, std::size_t length) {
  // C(l + p - 2, l) multisets, roughly 1/(p-1) of them canonical.
  double multisets = 1;
  for (std::size_t i = 1; i <= length; ++i) {
    multisets = multisets * static_cast<double>(p.value() - 2 + i) /
                static_cast<double>(i);
  }
  return multisets / (p.value() - 1) * std::ldexp(1.0, static_cast<int>(length));
}

void ValidateSweepSpec(const SweepSpec& spec) {
  auto invalid = [](const std::string& why) {
    throw Error(ErrorCode::kInvalidArgument, "invalid sweep: " + why);
  };
  if (spec.p.value() > kMaxSweepPrime) invalid("p must be <= 17");
  if (spec.length == 0 || spec.length > kMaxSweepLength) {
    invalid("l must be in [1, 24]");
  }
  if (spec.shard.total == 0 || spec.shard.index >= spec.shard.total) {
    invalid("shard index must be below the shard count");
  }
  if (spec.checks.empty()) invalid("no checks selected");
  if (!spec.allow_large &&
      EstimatedSweepWork(spec.p, spec.length) > kLargeSweepWork) {
    throw Error(ErrorCode::kBudgetExceeded,
                "sweep p=" + std::to_string(spec.p.value()) +
                    ", l=" + std::to_string(spec.length) +
                    " is large; enable it explicitly");
  }
}

std::vector<Failure> CheckSequence(const Sequence& a, Check check,
                                   CheckTally* tally, Counters* counters) {
  CheckTally local_tally;
  Counters local_counters;
  std::vector<Failure> failures;
  Context ctx(a);
  RunCheck(ctx, check, tally ? *tally : local_tally,
           counters ? *counters : local_counters, failures);
  return failures;
}

unsigned DefaultThreadCount() {
  if (const char* env = std::getenv("ZEROSUM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport RunSweep(const SweepSpec& spec, unsigned threads) {
  ValidateSweepSpec(spec);
  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = threads == 0 ? DefaultThreadCount() : threads;

  // Worker w of W owns ranks congruent to index + total * w mod total * W.
  std::vector<WorkerResult> results(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) {
      pool.emplace_back([&, w] {
        RunWorker(spec, spec.shard.index + spec.shard.total * w,
                  spec.shard.total * workers, results[w]);
      });
    }
    RunWorker(spec, spec.shard.index, spec.shard.total * workers, results[0]);
  }

  VerificationReport report{spec};
  for (Check c : spec.checks) report.tallies[c];
  for (WorkerResult& r : results) {
    report.sequences_checked += r.checked;
    for (const auto& [check, t] : r.tallies) {
      CheckTally& dst = report.tallies[check];
      dst.passed += t.passed;
      dst.failed += t.failed;
      dst.not_applicable += t.not_applicable;
      dst.skipped += t.skipped;
    }
    for (const auto& [name, n] : r.counters) report.counters[name] += n;
    for (Failure& f : r.failures) report.failures.push_back(std::move(f));
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const Failure& x, const Failure& y) {
                     if (x.rank != y.rank) return x.rank < y.rank;
                     return x.check < y.check;
                   });
  std::map<Check, std::size_t> kept;
  std::erase_if(report.failures, [&](const Failure& f) {
    return kept[f.check]++ >= kMaxFailuresPerCheck;
  });
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

VerificationReport verify_dim_theorems(SweepSpec spec) {
  return SingleCheckSweep(std::move(spec), Check::kDimTheorems);
}
VerificationReport verify_minimal_counts(SweepSpec spec) {
  return SingleCheckSweep(std::move(spec), Check::kMinimalCounts);
}
VerificationReport verify_reconstruction(SweepSpec spec) {
  return SingleCheckSweep(std::move(spec), Check::kReconstruction);
}
VerificationReport verify_sumset_lemmas(SweepSpec spec) {
  return SingleCheckSweep(std::move(spec), Check::kSumsetLemmas);
}
VerificationReport verify_affine(SweepSpec spec) {
  return SingleCheckSweep(std::move(spec), Check::kAffine);
}
VerificationReport verify_exceptional(SweepSpec spec) {
  return SingleCheckSweep(std::move(spec), Check::kExceptional);
}

}  // namespace zerosum
