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

#ifndef TIGROUP_TIPROPS_REPORT_H_
#define TIGROUP_TIPROPS_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tigroup/permcore/perm_group.h"

namespace tig {

enum class Verdict { kHolds, kFails, kNotApplicable, kSkipped };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

// One checked sub-statement. For implications, `instantiated` is false when
// the antecedent did not hold and the clause passed vacuously.
struct Clause {
  std::string name;
  Verdict verdict = Verdict::kHolds;
  std::string detail;
  bool instantiated = true;
};

enum class FactKind {
  kOrder,                // |g| == value
  kContains,             // e in g
  kNotContains,          // e not in g
  kSubgroup,             // s <= g
  kNormalizes,           // g normalizes s
  kTrivialIntersection,  // a cap b == 1
  kConjugate,            // a^t == b, args (a, b, t)
  kConjugateInto,        // a^t <= b, args (a, b, t)
  kElementOrder,         // order of e == value
  kElementConjugate,     // x^t == y, args (x, y, t)
  kCommute,              // xy == yx
  kNotCommute,
  kFixedCoset,           // x in k, x not in l, x^h x^-1 in l
  kProductOrder,         // |a b| == value as a product set
};

std::string_view to_string(FactKind k);
std::optional<FactKind> parse_fact_kind(std::string_view text);

struct Fact {
  FactKind kind;
  std::vector<std::string> args;
  std::uint64_t value = 0;
};

// Named groups and elements plus facts about them. A certificate is
// self-contained: recheck() needs nothing but the stored permutations.
class Certificate {
 public:
  void add_group(const std::string& name, const PermutationGroup& g) { groups_.insert_or_assign(name, g); }
  void add_element(const std::string& name, const Permutation& x) { elements_.insert_or_assign(name, x); }
  void add(FactKind kind, std::vector<std::string> args, std::uint64_t value = 0) {
    facts_.push_back({kind, std::move(args), value});
  }

  const std::map<std::string, PermutationGroup>& groups() const { return groups_; }
  const std::map<std::string, Permutation>& elements() const { return elements_; }
  const std::vector<Fact>& facts() const { return facts_; }
  bool empty() const { return facts_.empty(); }

 private:
  std::map<std::string, PermutationGroup> groups_;
  std::map<std::string, Permutation> elements_;
  std::vector<Fact> facts_;
};

struct RecheckResult {
  bool ok = true;
  // Description of the first fact that did not verify.
  std::string message;
};

// Re-verifies every fact from scratch with stabilizer chains and element
// enumeration only.
RecheckResult recheck(const Certificate& cert, std::uint64_t enumeration_bound = 1'000'000);

struct TheoremReport {
  std::string statement;
  Verdict verdict = Verdict::kHolds;
  std::string detail;
  std::vector<Clause> clauses;
  Certificate certificate;

  void add_clause(std::string name, Verdict v, std::string detail = {}, bool instantiated = true) {
    clauses.push_back({std::move(name), v, std::move(detail), instantiated});
  }
  void add_check(std::string name, bool ok, std::string detail = {}, bool instantiated = true) {
    add_clause(std::move(name), ok ? Verdict::kHolds : Verdict::kFails, std::move(detail), instantiated);
  }
  // Overall verdict from the clauses: FAILS beats SKIPPED beats HOLDS.
  void settle();
};

TheoremReport not_applicable(std::string statement, std::string failed_hypothesis);
TheoremReport skipped(std::string statement, std::string reason);

}  // namespace tig

#endif  // TIGROUP_TIPROPS_REPORT_H_
