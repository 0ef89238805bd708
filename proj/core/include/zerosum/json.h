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

// Stable JSON encodings of results. All output is compact, keys appear in
// a fixed order and indices are 1-based.

#ifndef ZEROSUM_JSON_H_
#define ZEROSUM_JSON_H_

#include <cstddef>
#include <string>
#include <vector>

#include "zerosum/classify.h"
#include "zerosum/ratio.h"
#include "zerosum/sequence.h"
#include "zerosum/solutions.h"
#include "zerosum/verify.h"

namespace zerosum {

// {"p","l","alpha","solutions","dim"}; dim is null for an empty set.
std::string SolutionSetJson(const SolutionSet& s);

// {"tag","t","r","predicted_dim","verified_dim"}; t and r may be null.
std::string ClassificationJson(const StructureClass& c,
                               std::size_t verified_dim);

// {"mode","classes","includes_collinear"}
std::string ReconstructionJson(const ReconstructionResult& r);

// {"p","l","supports"}
std::string MinimalSolutionsJson(const Sequence& a,
                                 const std::vector<SupportSet>& minimal);

// {"p","l","alpha","subset","reduced","dim"}
std::string AffineJson(const Sequence& a, std::uint32_t alpha,
                       const AffineReduction& reduction, std::size_t dim);

// {"d","ratios","parts","ratio_sets","conditions"}; conditions is null
// when they were not evaluated.
std::string RatioJson(const RatioDecomposition& d,
                      const NecessaryConditionsReport* report);

// {"p","l","filter","checks","checked","failures","elapsed_ms","shard",
//  "tallies","counters"}
std::string ReportJson(const VerificationReport& report);

// ReportJson without elapsed_ms, for comparing runs.
std::string ReportJsonWithoutTiming(const VerificationReport& report);

}  // namespace zerosum

#endif  // ZEROSUM_JSON_H_
