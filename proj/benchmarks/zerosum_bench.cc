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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "zerosum/classify.h"
#include "zerosum/sequence.h"
#include "zerosum/solutions.h"
#include "zerosum/verify.h"

namespace zerosum {
namespace {

Sequence RandomSequence(std::uint32_t p, std::size_t n) {
  std::mt19937_64 rng(n * 1000003 + p);
  std::vector<std::uint32_t> a(n);
  for (auto& v : a) v = 1 + static_cast<std::uint32_t>(rng() % (p - 1));
  return Sequence(Prime(p), std::move(a));
}

void BM_EnumerateDirect(benchmark::State& state) {
  const Sequence a = RandomSequence(31, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_solutions(a, Residue(0, a.prime())));
  }
}
BENCHMARK(BM_EnumerateDirect)->DenseRange(12, 24, 4);

void BM_EnumerateMeetInTheMiddle(benchmark::State& state) {
  const Sequence a = RandomSequence(31, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_solutions(a, Residue(0, a.prime()),
                                                 EnumerationMode::kMeetInTheMiddle));
  }
}
BENCHMARK(BM_EnumerateMeetInTheMiddle)->DenseRange(12, 24, 4);

void BM_SolutionDim(benchmark::State& state) {
  const Sequence a = RandomSequence(13, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solution_dim(a));
}
BENCHMARK(BM_SolutionDim)->DenseRange(8, 20, 4);

void BM_Classify(benchmark::State& state) {
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  const Sequence a = RandomSequence(p, p);
  for (auto _ : state) benchmark::DoNotOptimize(classify(a));
}
BENCHMARK(BM_Classify)->Arg(7)->Arg(11)->Arg(13);

void BM_CanonicalForm(benchmark::State& state) {
  const Sequence a = RandomSequence(17, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(a));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(16)->Arg(24);

void BM_DimSweep(benchmark::State& state) {
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  const SweepSpec spec{Prime(p), p, SumFilter::kAll, {Check::kDimTheorems}, Shard{}, false};
  for (auto _ : state) benchmark::DoNotOptimize(RunSweep(spec, 1));
}
BENCHMARK(BM_DimSweep)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zerosum

BENCHMARK_MAIN();
