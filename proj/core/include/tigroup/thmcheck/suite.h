// Copyright 2026 The tigroup Authors
//
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

#ifndef TIGROUP_THMCHECK_SUITE_H_
#define TIGROUP_THMCHECK_SUITE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tigroup/corpus/catalog.h"
#include "tigroup/permcore/bounds.h"
#include "tigroup/tiprops/report.h"

namespace tig {

inline constexpr std::string_view kReportFormat = "tigroup-report/1";

// What a statement is evaluated on.
enum class SubjectKind {
  kSubgroup,        // (G, H)
  kNormalSubgroup,  // (G, N, H) with N normal in G
  kNormalPrime,     // (G, N, H, p) with p dividing |N|
  kCoprimePair,     // A acting on a normal N with G = N A
  kPrime,           // (G, p) with p dividing |G|
};

struct StatementInfo {
  std::string id;
  SubjectKind kind;
  // Needs the conjugacy classes of subgroups of G.
  bool needs_lattice = false;
  std::string summary;
};

// Every statement id in evaluation order.
const std::vector<StatementInfo>& statement_registry();

// Expands "all" and validates ids; throws InvalidInput for unknown ids.
std::vector<std::string> resolve_suites(const std::vector<std::string>& ids);

struct SuiteConfig {
  std::vector<std::string> suites;
  // Tag expression; empty selects every entry.
  std::string filter;
  Bounds bounds;
  std::uint64_t seed = 0;
  bool include_stretch = false;
  // Emit certificates of every result, not only of FAILS.
  bool all_certificates = false;
};

struct ResultRecord {
  std::string group;
  std::string subject;
  TheoremReport report;
  // The certificate was re-verified from scratch (vacuously true if empty).
  bool certificate_verified = true;
};

struct RunReport {
  SuiteConfig config;
  std::vector<ResultRecord> results;

  std::size_t count(Verdict v) const;
  // Non-vacuous HOLDS instantiations per "statement.clause".
  std::map<std::string, std::size_t> instantiations() const;
  // 0 no FAILS, 1 some FAILS, 3 SKIPPED results but no FAILS.
  int exit_code() const;
};

// Runs the selected statements over the selected entries. Deterministic
// given the config and the catalog. Throws InvalidInput on config faults.
RunReport run_suite(const SuiteConfig& config, const std::vector<CatalogEntry>& entries = catalog());

// Subjects offered to a statement for one entry, with their labels. Exposed
// for tests; run_suite evaluates exactly these.
struct Subject {
  std::string label;
  std::vector<PermutationGroup> groups;
  std::uint64_t prime = 0;
};
std::vector<Subject> subjects_for(const CatalogEntry& entry, SubjectKind kind, const Bounds& bounds);

// Evaluates one statement on one subject.
TheoremReport evaluate_statement(const StatementInfo& statement, const PermutationGroup& g, const Subject& subject,
                                 const Bounds& bounds);

// Deterministic JSON document (two-space indent, fixed key order).
std::string to_json(const RunReport& report);
std::string to_json(const TheoremReport& report, bool with_certificate = true);

}  // namespace tig

#endif  // TIGROUP_THMCHECK_SUITE_H_
