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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "zerosum/classify.h"
#include "zerosum/error.h"
#include "zerosum/json.h"
#include "zerosum/ratio.h"
#include "zerosum/sequence.h"
#include "zerosum/solutions.h"
#include "zerosum/verify.h"

namespace zerosum::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> ParseUnsigned(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string SetText(const SupportSet& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

template <typename Range>
std::string ListText(const Range& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

std::vector<std::uint32_t> ParseResidueList(std::string_view text,
                                            std::uint32_t p) {
  std::vector<std::uint32_t> out;
  for (std::string_view part : Split(text, ',')) {
    const auto v = ParseUnsigned(part);
    if (!v || *v >= p) {
      throw UsageError("--b entries must be integers in [0, p-1], got '" +
                       std::string(part) + "'");
    }
    out.push_back(static_cast<std::uint32_t>(*v));
  }
  return out;
}

Shard ParseShard(std::string_view text) {
  const auto parts = Split(text, '/');
  if (parts.size() != 2) throw UsageError("--shard expects i/n");
  const auto i = ParseUnsigned(parts[0]);
  const auto n = ParseUnsigned(parts[1]);
  if (!i || !n || *n == 0 || *i >= *n) {
    throw UsageError("--shard expects i/n with 0 <= i < n");
  }
  return Shard{*i, *n};
}

std::vector<Check> ParseChecks(std::string_view text) {
  if (text == "all") return {std::begin(kAllChecks), std::end(kAllChecks)};
  std::vector<Check> out;
  for (std::string_view part : Split(text, ',')) {
    const auto c = ParseCheck(part);
    if (!c) throw UsageError("unknown check '" + std::string(part) + "'");
    if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
  }
  return out;
}

struct Options {
  std::string seq;
  std::uint64_t alpha = 0;
  std::string method = "direct";
  std::string mode = "superset";
  std::string b;
  std::uint32_t p = 0;
  std::size_t l = 0;
  std::string filter = "all";
  std::string checks = "all";
  std::string shard = "0/1";
  std::string output = "json";
  bool large = false;
  unsigned threads = 0;
};

bool Json(const Options& o) { return o.output == "json"; }

int RunSolve(const Options& o, std::ostream& out) {
  const Sequence a = Sequence::Parse(o.seq);
  const Residue alpha(static_cast<std::int64_t>(o.alpha % a.modulus()),
                      a.prime());
  const EnumerationMode mode = o.method == "mitm"
                                   ? EnumerationMode::kMeetInTheMiddle
                                   : EnumerationMode::kDirect;
  const SolutionSet s = enumerate_solutions(a, alpha, mode);
  if (Json(o)) {
    out << SolutionSetJson(s) << "\n";
    return kExitOk;
  }
  out << a.ToString() << "  alpha=" << alpha.value() << "\n";
  out << "solutions " << s.members.size() << "  dim "
      << (s.span_rank ? std::to_string(*s.span_rank) : "-") << "\n";
  for (const SupportSet& m : s.members) out << "  " << SetText(m) << "\n";
  return kExitOk;
}

int RunDim(const Options& o, std::ostream& out) {
  const Sequence a = Sequence::Parse(o.seq);
  const std::size_t dim = solution_dim(a);
  if (Json(o)) {
    out << "{\"p\":" << a.modulus() << ",\"l\":" << a.length()
        << ",\"dim\":" << dim << "}\n";
  } else {
    out << dim << "\n";
  }
  return kExitOk;
}

int RunMinimal(const Options& o, std::ostream& out) {
  const Sequence a = Sequence::Parse(o.seq);
  const auto minimal =
      minimal_solutions(enumerate_solutions(a, Residue(0, a.prime())));
  if (Json(o)) {
    out << MinimalSolutionsJson(a, minimal) << "\n";
    return kExitOk;
  }
  out << a.ToString() << "  minimal " << minimal.size() << "\n";
  for (const SupportSet& m : minimal) out << "  " << SetText(m) << "\n";
  return kExitOk;
}

int RunClassify(const Options& o, std::ostream& out) {
  const Sequence a = Sequence::Parse(o.seq);
  const StructureClass c = classify(a);
  const std::size_t dim = solution_dim(a);
  if (Json(o)) {
    out << ClassificationJson(c, dim) << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(16) << "tag" << c.DisplayName() << "\n"
      << std::setw(16) << "t" << (c.t ? std::to_string(*c.t) : "-") << "\n"
      << std::setw(16) << "r" << (c.r ? std::to_string(*c.r) : "-") << "\n"
      << std::setw(16) << "predicted_dim" << c.predicted_dim << "\n"
      << std::setw(16) << "verified_dim" << dim << "\n";
  return kExitOk;
}

int RunReconstruct(const Options& o, std::ostream& out) {
  const Sequence a = Sequence::Parse(o.seq);
  const ReconstructionMode mode = o.mode == "equal"
                                      ? ReconstructionMode::kEqual
                                      : ReconstructionMode::kSuperset;
  const ReconstructionResult r = reconstruct(a, mode);
  if (Json(o)) {
    out << ReconstructionJson(r) << "\n";
    return kExitOk;
  }
  const Sequence self = ProjectiveRepresentative(a);
  out << "mode " << o.mode << "  classes " << r.classes.size() << "\n";
  for (const Sequence& b : r.classes) {
    out << "  " << ListText(b.entries())
        << (b == self ? "  (collinear)" : "") << "\n";
  }
  return kExitOk;
}

int RunAffine(const Options& o, std::ostream& out) {
  const Sequence a = Sequence::Parse(o.seq);
  const std::uint32_t alpha = static_cast<std::uint32_t>(o.alpha % a.modulus());
  const Residue target(alpha, a.prime());
  const auto reduction = affine_reduce(a, target);
  if (!reduction) {
    throw Error(ErrorCode::kEmptySolutionSet,
                "no subset of A sums to " + std::to_string(alpha));
  }
  const std::size_t dim = affine_dim(a, target);
  if (Json(o)) {
    out << AffineJson(a, alpha, *reduction, dim) << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(10) << "alpha" << alpha << "\n"
      << std::setw(10) << "I" << SetText(reduction->subset) << "\n"
      << std::setw(10) << "A_I" << reduction->reduced.ToString() << "\n"
      << std::setw(10) << "dim" << dim << "\n";
  return kExitOk;
}

int RunRatio(const Options& o, std::ostream& out) {
  const Sequence a = Sequence::Parse(o.seq);
  if (o.b.empty()) throw UsageError("ratio requires --b");
  const std::vector<std::uint32_t> b = ParseResidueList(o.b, a.modulus());
  const RatioDecomposition d = decompose(a, b);
  std::optional<NecessaryConditionsReport> report;
  std::string note;
  try {
    report = check_necessary_conditions(a, b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kPreconditionViolated) throw;
    note = e.what();
  }
  if (Json(o)) {
    out << RatioJson(d, report ? &*report : nullptr) << "\n";
    return kExitOk;
  }
  out << "d " << d.d() << "\n";
  for (std::size_t k = 0; k < d.d(); ++k) {
    out << "  ratio " << d.ratios[k] << "  indices " << SetText(d.parts[k])
        << "  sigma {" << ListText(d.ratio_sets[k].members()) << "}\n";
  }
  if (report) {
    out << "conditions " << (report->all_hold() ? "hold" : "violated")
        << "  excess " << report->excess << "\n";
  } else {
    out << "conditions not evaluated: " << note << "\n";
  }
  return kExitOk;
}

void PrintReportText(const VerificationReport& r, std::ostream& out) {
  out << "p=" << r.spec.p.value() << " l=" << r.spec.length
      << " filter=" << SumFilterName(r.spec.filter)
      << " shard=" << r.spec.shard.index << "/" << r.spec.shard.total << "\n";
  out << "checked " << r.sequences_checked << " sequences in "
      << r.elapsed.count() << " ms\n";
  out << std::left << std::setw(16) << "check" << std::right << std::setw(10)
      << "passed" << std::setw(8) << "failed" << std::setw(8) << "n/a"
      << std::setw(9) << "skipped" << "\n";
  for (Check c : r.spec.checks) {
    const CheckTally t = r.tallies.count(c) ? r.tallies.at(c) : CheckTally{};
    out << std::left << std::setw(16) << CheckName(c) << std::right
        << std::setw(10) << t.passed << std::setw(8) << t.failed
        << std::setw(8) << t.not_applicable << std::setw(9) << t.skipped
        << "\n";
  }
  for (const auto& [name, n] : r.counters) {
    out << "  " << std::left << std::setw(40) << name << n << "\n";
  }
  if (r.failures.empty()) {
    out << "verified\n";
    return;
  }
  out << r.failures.size() << " failures\n";
  for (const Failure& f : r.failures) {
    out << "  " << CheckName(f.check) << "  " << f.sequence.ToString()
        << "  expected " << f.expected << ", got " << f.got << "\n";
  }
}

int RunVerify(const Options& o, std::ostream& out) {
  if (o.p == 0 || o.l == 0) throw UsageError("verify requires --p and --l");
  const auto filter = ParseSumFilter(o.filter);
  if (!filter) throw UsageError("unknown filter '" + o.filter + "'");
  SweepSpec spec{Prime(o.p), o.l, *filter, ParseChecks(o.checks),
                 ParseShard(o.shard), o.large};
  const VerificationReport r = RunSweep(spec, o.threads);
  if (Json(o)) {
    out << ReportJson(r) << "\n";
  } else {
    PrintReportText(r, out);
  }
  return r.verified() ? kExitOk : kExitFailures;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"0-1 solutions of linear equations over F_p", "zerosum"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> outputs{"text", "json"};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "text or json")
        ->check(CLI::IsMember(outputs));
  };
  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--seq", o.seq, "sequence, e.g. \"p=5;A=1,2,2\"")
        ->required();
  };

  CLI::App* solve = app.add_subcommand("solve", "list the 0-1 solutions");
  add_seq(solve);
  solve->add_option("--alpha", o.alpha, "right-hand side");
  solve->add_option("--method", o.method, "direct or mitm")
      ->check(CLI::IsMember({"direct", "mitm"}));
  add_output(solve);

  CLI::App* dim = app.add_subcommand("dim", "dimension of the solution span");
  add_seq(dim);
  add_output(dim);

  CLI::App* minimal =
      app.add_subcommand("minimal", "inclusion-minimal nonempty solutions");
  add_seq(minimal);
  add_output(minimal);

  CLI::App* cls = app.add_subcommand("classify", "structure family");
  add_seq(cls);
  add_output(cls);

  CLI::App* rec =
      app.add_subcommand("reconstruct", "sequences sharing the solutions");
  add_seq(rec);
  rec->add_option("--mode", o.mode, "superset or equal")
      ->check(CLI::IsMember({"superset", "equal"}));
  add_output(rec);

  CLI::App* aff = app.add_subcommand("affine", "affine reduction");
  add_seq(aff);
  aff->add_option("--alpha", o.alpha, "right-hand side")->required();
  add_output(aff);

  CLI::App* ratio = app.add_subcommand("ratio", "ratio decomposition of (A,B)");
  add_seq(ratio);
  ratio->add_option("--b", o.b, "comma-separated residues")->required();
  add_output(ratio);

  CLI::App* verify = app.add_subcommand("verify", "exhaustive sweep");
  verify->add_option("--p", o.p, "prime")->required();
  verify->add_option("--l", o.l, "length")->required();
  verify->add_option("--filter", o.filter, "all, zero_sum or nonzero_sum");
  verify->add_option("--checks", o.checks, "comma-separated checks or all");
  verify->add_option("--shard", o.shard, "i/n");
  verify->add_option("--threads", o.threads, "worker threads (0: default)");
  verify->add_flag("--large", o.large, "allow large sweeps");
  add_output(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return RunSolve(o, out);
    if (dim->parsed()) return RunDim(o, out);
    if (minimal->parsed()) return RunMinimal(o, out);
    if (cls->parsed()) return RunClassify(o, out);
    if (rec->parsed()) return RunReconstruct(o, out);
    if (aff->parsed()) return RunAffine(o, out);
    if (ratio->parsed()) return RunRatio(o, out);
    return RunVerify(o, out);
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace zerosum::cli
