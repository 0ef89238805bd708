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

#include "zerosum/json.h"

#include <string>

#include "json.hpp"

namespace zerosum {

namespace {

using Json = nlohmann::ordered_json;

Json Indices(const SupportSet& s) {
  Json out = Json::array();
  for (std::size_t i : s.indices()) out.push_back(i);
  return out;
}

Json Entries(const Sequence& a) {
  Json out = Json::array();
  for (std::uint32_t v : a.entries()) out.push_back(v);
  return out;
}

template <typename T>
Json OrNull(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json ReportObject(const VerificationReport& report, bool with_timing) {
  Json out;
  out["p"] = report.spec.p.value();
  out["l"] = report.spec.length;
  out["filter"] = std::string(SumFilterName(report.spec.filter));
  Json checks = Json::array();
  for (Check c : report.spec.checks) checks.push_back(std::string(CheckName(c)));
  out["checks"] = checks;
  out["checked"] = report.sequences_checked;
  Json failures = Json::array();
  for (const Failure& f : report.failures) {
    Json item;
    item["sequence"] = f.sequence.ToString();
    item["check"] = std::string(CheckName(f.check));
    item["expected"] = f.expected;
    item["got"] = f.got;
    failures.push_back(item);
  }
  out["failures"] = failures;
  if (with_timing) out["elapsed_ms"] = report.elapsed.count();
  out["shard"] = std::to_string(report.spec.shard.index) + "/" +
                 std::to_string(report.spec.shard.total);
  Json tallies = Json::object();
  for (Check c : report.spec.checks) {
    const auto it = report.tallies.find(c);
    const CheckTally t = it == report.tallies.end() ? CheckTally{} : it->second;
    Json item;
    item["passed"] = t.passed;
    item["failed"] = t.failed;
    item["not_applicable"] = t.not_applicable;
    item["skipped"] = t.skipped;
    tallies[std::string(CheckName(c))] = item;
  }
  out["tallies"] = tallies;
  Json counters = Json::object();
  for (const auto& [name, n] : report.counters) counters[name] = n;
  out["counters"] = counters;
  return out;
}

}  // namespace

std::string SolutionSetJson(const SolutionSet& s) {
  Json out;
  out["p"] = s.p.value();
  out["l"] = s.length;
  out["alpha"] = s.target.value();
  Json members = Json::array();
  for (const SupportSet& m : s.members) members.push_back(Indices(m));
  out["solutions"] = members;
  out["dim"] = OrNull(s.span_rank);
  return out.dump();
}

std::string ClassificationJson(const StructureClass& c,
                               std::size_t verified_dim) {
  Json out;
  out["tag"] = c.DisplayName();
  out["t"] = OrNull(c.t);
  out["r"] = OrNull(c.r);
  out["predicted_dim"] = c.predicted_dim;
  out["verified_dim"] = verified_dim;
  return out.dump();
}

std::string ReconstructionJson(const ReconstructionResult& r) {
  Json out;
  out["mode"] = r.mode == ReconstructionMode::kSuperset ? "superset" : "equal";
  Json classes = Json::array();
  for (const Sequence& b : r.classes) classes.push_back(Entries(b));
  out["classes"] = classes;
  out["includes_collinear"] = r.includes_collinear;
  return out.dump();
}

std::string MinimalSolutionsJson(const Sequence& a,
                                 const std::vector<SupportSet>& minimal) {
  Json out;
  out["p"] = a.modulus();
  out["l"] = a.length();
  Json supports = Json::array();
  for (const SupportSet& m : minimal) supports.push_back(Indices(m));
  out["supports"] = supports;
  return out.dump();
}

std::string AffineJson(const Sequence& a, std::uint32_t alpha,
                       const AffineReduction& reduction, std::size_t dim) {
  Json out;
  out["p"] = a.modulus();
  out["l"] = a.length();
  out["alpha"] = alpha;
  out["subset"] = Indices(reduction.subset);
  out["reduced"] = Entries(reduction.reduced);
  out["dim"] = dim;
  return out.dump();
}

std::string RatioJson(const RatioDecomposition& d,
                      const NecessaryConditionsReport* report) {
  Json out;
  out["d"] = d.d();
  out["ratios"] = d.ratios;
  Json parts = Json::array();
  for (const SupportSet& s : d.parts) parts.push_back(Indices(s));
  out["parts"] = parts;
  Json sets = Json::array();
  for (const ResidueSet& s : d.ratio_sets) sets.push_back(s.members());
  out["ratio_sets"] = sets;
  if (report == nullptr) {
    out["conditions"] = nullptr;
  } else {
    Json c;
    c["excess"] = report->excess;
    c["has_zero_ratio"] = report->has_zero_ratio;
    c["sets_meet_only_at_zero"] = report->sets_meet_only_at_zero;
    c["lower_bound"] = report->lower_bound_holds;
    c["upper_bound"] = report->upper_bound_holds;
    c["balanced_when_tight"] = report->balanced_when_tight;
    c["all_hold"] = report->all_hold();
    out["conditions"] = c;
  }
  return out.dump();
}

std::string ReportJson(const VerificationReport& report) {
  return ReportObject(report, true).dump();
}

std::string ReportJsonWithoutTiming(const VerificationReport& report) {
  return ReportObject(report, false).dump();
}

}  // namespace zerosum
