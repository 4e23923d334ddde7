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

#include "tigroup/thmcheck/suite.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "tigroup/coact/coprime.h"
#include "tigroup/coact/fusion.h"
#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/primes.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"
#include "tigroup/thmcheck/filter.h"
#include "tigroup/tiprops/analysis.h"
#include "tigroup/tiprops/complement.h"
#include "tigroup/tiprops/frobenius.h"
#include "tigroup/tiprops/lemmas.h"

namespace tig {

namespace {

using Json = nlohmann::ordered_json;
using Checker = std::function<TheoremReport(const PermutationGroup&, const Subject&, const Bounds&)>;

struct Statement {
  StatementInfo info;
  Checker check;
};

const std::vector<Statement>& statements() {
  using K = SubjectKind;
  static const std::vector<Statement> table{
      {{"frobenius_kernel", K::kSubgroup, false, "kernel of a Frobenius group built as a set and verified"},
       [](const auto& g, const auto& s, const auto& b) { return frobenius_kernel(g, s.groups[0], b).report; }},
      {{"ti_hall_structure", K::kSubgroup, false, "pi-length, factorization, Frobenius sections, solvability"},
       [](const auto& g, const auto& s, const auto& b) { return analyze_ti_hall(g, s.groups[0], b).report; }},
      {{"ti_hall_decomposition", K::kSubgroup, false, "G = O H Q with Q complementing H in N_G(H)"},
       [](const auto& g, const auto& s, const auto& b) { return decompose_ti_hall(g, s.groups[0], b).report; }},
      {{"hall_via_normalizer", K::kSubgroup, false, "T.I. H is Hall in G iff Hall in N_G(H)"},
       [](const auto& g, const auto& s, const auto& b) { return check_hall_via_normalizer(g, s.groups[0], b); }},
      {{"hall_ti_conjugacy", K::kSubgroup, true, "pi-subgroups conjugate into a T.I. Hall H; one Hall class"},
       [](const auto& g, const auto& s, const auto& b) { return check_hall_ti_conjugacy(g, s.groups[0], b); }},
      {{"normal_complement_transfer", K::kSubgroup, false, "normal complement in N_G(H) iff in G"},
       [](const auto& g, const auto& s, const auto& b) {
         return check_normal_complement_transfer(g, s.groups[0], b);
       }},
      {{"centralizer_complement", K::kSubgroup, false, "C_H(Q) is Hall with normal complement O[H,Q]Q"},
       [](const auto& g, const auto& s, const auto& b) { return check_centralizer_complement(g, s.groups[0], b); }},
      {{"double_frobenius", K::kSubgroup, false, "double Frobenius subgroups of G/O'"},
       [](const auto& g, const auto& s, const auto& b) { return check_double_frobenius(g, s.groups[0], b); }},
      {{"fusion_complement", K::kSubgroup, true, "fusion control by a Hall H gives a normal complement"},
       [](const auto& g, const auto& s, const auto& b) { return check_fusion_complement(g, s.groups[0], b); }},
      {{"invariant_sylow", K::kNormalPrime, false, "H-invariant Sylow subgroups of a complemented normal N"},
       [](const auto& g, const auto& s, const auto& b) {
         return check_invariant_sylow(g, s.groups[0], s.groups[1], s.prime, b);
       }},
      {{"quotient_normalizer", K::kNormalSubgroup, false, "normalizer of the image of H in G/N"},
       [](const auto& g, const auto& s, const auto& b) {
         return check_quotient_normalizer(g, s.groups[0], s.groups[1], b);
       }},
      {{"ti_image", K::kNormalSubgroup, false, "image of a T.I. subgroup in G/N is T.I."},
       [](const auto& g, const auto& s, const auto& b) { return check_ti_image(g, s.groups[0], s.groups[1], b); }},
      {{"coprime_action", K::kCoprimePair, false, "coprime action identities"},
       [](const auto& g, const auto& s, const auto& b) {
         return check_coprime_identities(tig::make_pair(g, s.groups[0], s.groups[1]), b);
       }},
      {{"cyclic_sylow_action", K::kCoprimePair, false, "coprime action on a group with cyclic Sylow subgroups"},
       [](const auto& g, const auto& s, const auto& b) {
         return check_cyclic_sylow_action(tig::make_pair(g, s.groups[0], s.groups[1]), b);
       }},
      {{"normal_p_complement", K::kPrime, false, "normal p-complement criteria"},
       [](const auto& g, const auto& s, const auto& b) { return check_normal_p_complement(g, s.prime, b); }},
  };
  return table;
}

const Statement& find_statement(std::string_view id) {
  for (const auto& s : statements()) {
    if (s.info.id == id) return s;
  }
  throw InvalidInput("unknown statement '" + std::string(id) + "'");
}

bool same_as_any(const PermutationGroup& h, const std::vector<Subject>& list) {
  return std::any_of(list.begin(), list.end(), [&](const Subject& s) { return same_group(s.groups[0], h); });
}

std::vector<Subject> subgroup_subjects(const CatalogEntry& entry, const Bounds& bounds) {
  std::vector<Subject> out;
  for (const auto& [label, gens] : entry.spec().subgroups) {
    if (label == "N" || label == "A") continue;
    out.push_back({label, {entry.subgroup(label)}, 0});
  }
  const PermutationGroup& g = entry.group();
  if (g.order() > bounds.subgroups) return out;
  const std::size_t distinguished = out.size();
  const auto& classes = *subgroup_classes(g, bounds);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& h = classes[i].representative;
    if (same_as_any(h, std::vector<Subject>(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(distinguished)))) {
      continue;
    }
    out.push_back({"class" + std::to_string(i), {h}, 0});
  }
  return out;
}

// Distinguished N first, then the proper nontrivial normal subgroups.
std::vector<Subject> normal_subjects(const CatalogEntry& entry, const Bounds& bounds) {
  std::vector<Subject> out;
  if (entry.has_subgroup("N")) out.push_back({"N", {entry.subgroup("N")}, 0});
  const PermutationGroup& g = entry.group();
  if (g.order() > bounds.subgroups) return out;
  const auto& normals = *normal_subgroups(g, bounds);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const auto& n = normals[i];
    if (n.is_trivial() || n.order() == g.order()) continue;
    if (!out.empty() && same_group(out[0].groups[0], n)) continue;
    out.push_back({"normal" + std::to_string(i), {n}, 0});
  }
  return out;
}

TheoremReport run_checker(const Statement& st, const PermutationGroup& g, const Subject& s, const Bounds& bounds) {
  try {
    return st.check(g, s, bounds);
  } catch (const BoundExceeded& e) {
    return skipped(st.info.id, e.what());
  } catch (const std::exception& e) {
    TheoremReport rep;
    rep.statement = st.info.id;
    rep.add_check("evaluation", false, std::string("error: ") + e.what());
    rep.settle();
    return rep;
  }
}

Json group_json(const PermutationGroup& g) {
  Json gens = Json::array();
  for (const auto& x : g.generators()) gens.push_back(to_cycle_string(x));
  return Json{{"degree", g.degree()}, {"generators", gens}};
}

Json certificate_json(const Certificate& cert) {
  Json groups = Json::object();
  for (const auto& [name, g] : cert.groups()) groups[name] = group_json(g);
  Json elements = Json::object();
  for (const auto& [name, x] : cert.elements()) elements[name] = to_cycle_string(x);
  Json facts = Json::array();
  for (const auto& f : cert.facts()) {
    facts.push_back(Json{{"kind", std::string(to_string(f.kind))}, {"args", f.args}, {"value", f.value}});
  }
  return Json{{"groups", groups}, {"elements", elements}, {"facts", facts}};
}

Json report_json(const TheoremReport& r, bool with_certificate) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back(Json{{"name", c.name},
                           {"verdict", std::string(to_string(c.verdict))},
                           {"detail", c.detail},
                           {"instantiated", c.instantiated}});
  }
  Json j{{"statement", r.statement},
         {"verdict", std::string(to_string(r.verdict))},
         {"detail", r.detail},
         {"clauses", clauses}};
  if (with_certificate) j["certificate"] = certificate_json(r.certificate);
  return j;
}

}  // namespace

const std::vector<StatementInfo>& statement_registry() {
  static const std::vector<StatementInfo> infos = [] {
    std::vector<StatementInfo> out;
    for (const auto& s : statements()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& ids) {
  std::vector<bool> selected(statements().size(), false);
  for (const auto& id : ids) {
    if (id == "all") {
      std::fill(selected.begin(), selected.end(), true);
      continue;
    }
    const Statement& st = find_statement(id);
    selected[static_cast<std::size_t>(&st - statements().data())] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (selected[i]) out.push_back(statements()[i].info.id);
  }
  return out;
}

std::vector<Subject> subjects_for(const CatalogEntry& entry, SubjectKind kind, const Bounds& bounds) {
  const PermutationGroup& g = entry.group();
  std::vector<Subject> out;
  switch (kind) {
    case SubjectKind::kSubgroup:
      return subgroup_subjects(entry, bounds);
    case SubjectKind::kNormalSubgroup:
    case SubjectKind::kNormalPrime: {
      const auto normals = normal_subjects(entry, bounds);
      const auto subs = subgroup_subjects(entry, bounds);
      for (const auto& n : normals) {
        for (const auto& h : subs) {
          const PermutationGroup& hg = h.groups[0];
          if (hg.is_trivial() || std::gcd(n.groups[0].order(), hg.order()) != 1) continue;
          Subject s{n.label + "," + h.label, {n.groups[0], hg}, 0};
          if (kind == SubjectKind::kNormalSubgroup) {
            out.push_back(std::move(s));
            continue;
          }
          if (n.groups[0].order() * hg.order() != g.order()) continue;
          for (auto p : prime_divisors(n.groups[0].order())) {
            s.prime = p;
            s.label = n.label + "," + h.label + ",p=" + std::to_string(p);
            out.push_back(s);
          }
        }
      }
      return out;
    }
    case SubjectKind::kCoprimePair: {
      if (entry.has_subgroup("N") && entry.has_subgroup("A")) {
        out.push_back({"N,A", {entry.subgroup("N"), entry.subgroup("A")}, 0});
      }
      if (g.order() > bounds.subgroups) return out;
      const auto& normals = *normal_subgroups(g, bounds);
      const auto& classes = *subgroup_classes(g, bounds);
      for (std::size_t i = 0; i < normals.size(); ++i) {
        const auto& n = normals[i];
        if (n.is_trivial() || n.order() == g.order()) continue;
        for (std::size_t j = 0; j < classes.size(); ++j) {
          const auto& a = classes[j].representative;
          if (n.order() * a.order() != g.order() || std::gcd(n.order(), a.order()) != 1) continue;
          if (!out.empty() && same_group(out[0].groups[0], n) && same_group(out[0].groups[1], a)) continue;
          out.push_back({"normal" + std::to_string(i) + ",class" + std::to_string(j), {n, a}, 0});
        }
      }
      return out;
    }
    case SubjectKind::kPrime:
      for (auto p : prime_divisors(g.order())) out.push_back({"p=" + std::to_string(p), {}, p});
      return out;
  }
  return out;
}

TheoremReport evaluate_statement(const StatementInfo& statement, const PermutationGroup& g, const Subject& subject,
                                 const Bounds& bounds) {
  return run_checker(find_statement(statement.id), g, subject, bounds);
}

std::size_t RunReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [v](const ResultRecord& r) { return r.report.verdict == v; }));
}

std::map<std::string, std::size_t> RunReport::instantiations() const {
  std::map<std::string, std::size_t> out;
  for (const auto& r : results) {
    for (const auto& c : r.report.clauses) {
      auto& n = out[r.report.statement + "." + c.name];
      if (c.instantiated && c.verdict == Verdict::kHolds) ++n;
    }
  }
  return out;
}

int RunReport::exit_code() const {
  if (count(Verdict::kFails) > 0) return 1;
  if (count(Verdict::kSkipped) > 0) return 3;
  return 0;
}

RunReport run_suite(const SuiteConfig& config, const std::vector<CatalogEntry>& entries) {
  if (config.bounds.enumeration == 0 || config.bounds.subgroups == 0 || config.bounds.isomorphism == 0) {
    throw InvalidInput("bounds must be positive");
  }
  RunReport report;
  report.config = config;
  report.config.suites = resolve_suites(config.suites);
  const TagFilter filter = TagFilter::parse(config.filter);
  for (const auto& entry : entries) {
    if (entry.has_tag("stretch") && !config.include_stretch) continue;
    if (!filter.matches(entry.spec())) continue;
    const PermutationGroup& g = entry.group();
    std::map<SubjectKind, std::vector<Subject>> subjects;
    for (const auto& id : report.config.suites) {
      const Statement& st = find_statement(id);
      if (st.info.needs_lattice && g.order() > config.bounds.subgroups) continue;
      auto it = subjects.find(st.info.kind);
      if (it == subjects.end()) {
        std::vector<Subject> list;
        try {
          list = subjects_for(entry, st.info.kind, config.bounds);
        } catch (const BoundExceeded& e) {
          report.results.push_back({entry.name(), "*", skipped(id, e.what()), true});
          continue;
        }
        it = subjects.emplace(st.info.kind, std::move(list)).first;
      }
      for (const auto& s : it->second) {
        ResultRecord rec{entry.name(), s.label, run_checker(st, g, s, config.bounds), true};
        if (!rec.report.certificate.empty()) {
          RecheckResult rc;
          try {
            rc = recheck(rec.report.certificate, config.bounds.enumeration);
          } catch (const BoundExceeded& e) {
            rc = {false, e.what()};
          }
          rec.certificate_verified = rc.ok;
          if (!rc.ok && rec.report.verdict == Verdict::kHolds) {
            rec.report.add_check("certificate", false, rc.message);
            rec.report.settle();
          }
        }
        report.results.push_back(std::move(rec));
      }
    }
  }
  return report;
}

std::string to_json(const TheoremReport& report, bool with_certificate) {
  return report_json(report, with_certificate).dump(2) + "\n";
}

std::string to_json(const RunReport& report) {
  const SuiteConfig& c = report.config;
  Json config{{"suites", c.suites},
              {"filter", c.filter},
              {"include_stretch", c.include_stretch},
              {"seed", c.seed},
              {"bounds",
               {{"enumeration", c.bounds.enumeration},
                {"subgroups", c.bounds.subgroups},
                {"isomorphism", c.bounds.isomorphism}}}};
  Json summary{{"total", report.results.size()}};
  for (auto v : {Verdict::kHolds, Verdict::kFails, Verdict::kNotApplicable, Verdict::kSkipped}) {
    summary[std::string(to_string(v))] = report.count(v);
  }
  Json inst = Json::object();
  for (const auto& [k, n] : report.instantiations()) inst[k] = n;
  Json results = Json::array();
  for (const auto& r : report.results) {
    const bool cert = c.all_certificates || r.report.verdict == Verdict::kFails;
    Json j{{"group", r.group}, {"subject", r.subject}};
    Json body = report_json(r.report, cert);
    for (auto& [k, v] : body.items()) j[k] = v;
    j["certificate_verified"] = r.certificate_verified;
    results.push_back(std::move(j));
  }
  Json doc{{"format", std::string(kReportFormat)},
           {"config", config},
           {"summary", summary},
           {"instantiations", inst},
           {"results", results}};
  return doc.dump(2) + "\n";
}

}  // namespace tig
