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

#include "tigroup/tiprops/report.h"

#include <array>
#include <utility>

namespace tig {

namespace {

constexpr std::array<std::pair<Verdict, std::string_view>, 4> kVerdictNames{{
    {Verdict::kHolds, "HOLDS"},
    {Verdict::kFails, "FAILS"},
    {Verdict::kNotApplicable, "NOT_APPLICABLE"},
    {Verdict::kSkipped, "SKIPPED"},
}};

constexpr std::array<std::pair<FactKind, std::string_view>, 14> kFactNames{{
    {FactKind::kOrder, "ORDER"},
    {FactKind::kContains, "CONTAINS"},
    {FactKind::kNotContains, "NOT_CONTAINS"},
    {FactKind::kSubgroup, "SUBGROUP"},
    {FactKind::kNormalizes, "NORMALIZES"},
    {FactKind::kTrivialIntersection, "TRIVIAL_INTERSECTION"},
    {FactKind::kConjugate, "CONJUGATE"},
    {FactKind::kConjugateInto, "CONJUGATE_INTO"},
    {FactKind::kElementOrder, "ELEMENT_ORDER"},
    {FactKind::kElementConjugate, "ELEMENT_CONJUGATE"},
    {FactKind::kCommute, "COMMUTE"},
    {FactKind::kNotCommute, "NOT_COMMUTE"},
    {FactKind::kFixedCoset, "FIXED_COSET"},
    {FactKind::kProductOrder, "PRODUCT_ORDER"},
}};

class Checker {
 public:
  Checker(const Certificate& cert, std::uint64_t bound) : cert_(cert), bound_(bound) {}

  bool run(const Fact& f) {
    switch (f.kind) {
      case FactKind::kOrder:
        return arity(f, 1) && group(f.args[0]).order() == f.value;
      case FactKind::kContains:
        return arity(f, 2) && group(f.args[0]).contains(element(f.args[1]));
      case FactKind::kNotContains:
        return arity(f, 2) && !group(f.args[0]).contains(element(f.args[1]));
      case FactKind::kSubgroup:
        return arity(f, 2) && group(f.args[0]).contains(group(f.args[1]));
      case FactKind::kNormalizes: {
        if (!arity(f, 2)) return false;
        const auto& g = group(f.args[0]);
        const auto& s = group(f.args[1]);
        for (const auto& x : g.generators()) {
          for (const auto& y : s.generators()) {
            if (!s.contains(y.conjugate_by(x))) return false;
          }
        }
        return true;
      }
      case FactKind::kTrivialIntersection:
        return arity(f, 2) && intersection_order(group(f.args[0]), group(f.args[1])) == 1;
      case FactKind::kConjugate:
      case FactKind::kConjugateInto: {
        if (!arity(f, 3)) return false;
        const auto& a = group(f.args[0]);
        const auto& b = group(f.args[1]);
        const auto& t = element(f.args[2]);
        for (const auto& x : a.generators()) {
          if (!b.contains(x.conjugate_by(t))) return false;
        }
        return f.kind == FactKind::kConjugateInto || a.order() == b.order();
      }
      case FactKind::kElementOrder:
        return arity(f, 1) && element(f.args[0]).order() == f.value;
      case FactKind::kElementConjugate:
        return arity(f, 3) && element(f.args[0]).conjugate_by(element(f.args[2])) == element(f.args[1]);
      case FactKind::kCommute:
      case FactKind::kNotCommute: {
        if (!arity(f, 2)) return false;
        const auto& x = element(f.args[0]);
        const auto& y = element(f.args[1]);
        return (x * y == y * x) == (f.kind == FactKind::kCommute);
      }
      case FactKind::kFixedCoset: {
        if (!arity(f, 4)) return false;
        const auto& h = element(f.args[0]);
        const auto& x = element(f.args[1]);
        const auto& k = group(f.args[2]);
        const auto& l = group(f.args[3]);
        return k.contains(x) && !l.contains(x) && l.contains(x.conjugate_by(h) * x.inverse());
      }
      case FactKind::kProductOrder: {
        if (!arity(f, 2)) return false;
        const auto& a = group(f.args[0]);
        const auto& b = group(f.args[1]);
        std::uint64_t meet = intersection_order(a, b);
        return a.order() / meet * b.order() == f.value;
      }
    }
    return false;
  }

 private:
  static bool arity(const Fact& f, std::size_t n) { return f.args.size() == n; }

  const PermutationGroup& group(const std::string& name) const { return cert_.groups().at(name); }
  const Permutation& element(const std::string& name) const { return cert_.elements().at(name); }

  std::uint64_t intersection_order(const PermutationGroup& a, const PermutationGroup& b) const {
    const auto& small = a.order() <= b.order() ? a : b;
    const auto& large = a.order() <= b.order() ? b : a;
    std::uint64_t count = 0;
    for_each_element(
        small,
        [&](const Permutation& x) {
          if (large.contains(x)) ++count;
          return true;
        },
        Bounds{.enumeration = bound_});
    return count;
  }

  const Certificate& cert_;
  std::uint64_t bound_;
};

}  // namespace

std::string_view to_string(Verdict v) {
  for (const auto& [k, name] : kVerdictNames) {
    if (k == v) return name;
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (const auto& [k, name] : kVerdictNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::string_view to_string(FactKind k) {
  for (const auto& [kind, name] : kFactNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<FactKind> parse_fact_kind(std::string_view text) {
  for (const auto& [kind, name] : kFactNames) {
    if (name == text) return kind;
  }
  return std::nullopt;
}

RecheckResult recheck(const Certificate& cert, std::uint64_t enumeration_bound) {
  Checker checker(cert, enumeration_bound);
  for (std::size_t i = 0; i < cert.facts().size(); ++i) {
    const Fact& f = cert.facts()[i];
    bool ok = false;
    std::string error;
    try {
      ok = checker.run(f);
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (!ok) {
      std::string msg = "fact " + std::to_string(i) + " " + std::string(to_string(f.kind)) + "(";
      for (std::size_t j = 0; j < f.args.size(); ++j) msg += (j ? "," : "") + f.args[j];
      msg += ") did not verify";
      if (!error.empty()) msg += ": " + error;
      return {false, msg};
    }
  }
  return {};
}

void TheoremReport::settle() {
  if (verdict == Verdict::kNotApplicable) return;
  bool skipped_any = false;
  bool failed_any = false;
  for (const auto& c : clauses) {
    if (c.verdict == Verdict::kFails) failed_any = true;
    if (c.verdict == Verdict::kSkipped) skipped_any = true;
  }
  verdict = failed_any ? Verdict::kFails : skipped_any ? Verdict::kSkipped : Verdict::kHolds;
}

TheoremReport not_applicable(std::string statement, std::string failed_hypothesis) {
  TheoremReport r;
  r.statement = std::move(statement);
  r.verdict = Verdict::kNotApplicable;
  r.detail = std::move(failed_hypothesis);
  return r;
}

TheoremReport skipped(std::string statement, std::string reason) {
  TheoremReport r;
  r.statement = std::move(statement);
  r.verdict = Verdict::kSkipped;
  r.detail = std::move(reason);
  return r;
}

}  // namespace tig
