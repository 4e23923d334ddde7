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

// Command-line front end: analyze, check, kernel, catalog.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tigroup/corpus/catalog.h"
#include "tigroup/corpus/spec.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"
#include "tigroup/thmcheck/suite.h"
#include "tigroup/tiprops/analysis.h"
#include "tigroup/tiprops/frobenius.h"
#include "tigroup/tiprops/pi_series.h"
#include "tigroup/tiprops/ti.h"

namespace {

using namespace tig;

constexpr int kUsageError = 2;

struct Globals {
  Bounds bounds;
  std::uint64_t seed = 0;
  std::string json_path;
};

// A catalog name or a group-spec file.
CatalogEntry resolve_group(const std::string& text) {
  if (const CatalogEntry* e = find_entry(text)) return *e;
  if (std::filesystem::is_regular_file(text)) return CatalogEntry(load_spec(text));
  throw InvalidInput("no catalog entry or spec file named '" + text + "'");
}

// A subgroup label of the entry or a comma-separated generator list.
PermutationGroup resolve_subgroup(const CatalogEntry& entry, const std::string& text) {
  if (entry.has_subgroup(text)) return entry.subgroup(text);
  const PermutationGroup& g = entry.group();
  return closure(g, parse_generator_list(text, g.degree()));
}

void write_json(const Globals& globals, const std::string& doc) {
  if (globals.json_path.empty()) return;
  std::ofstream out(globals.json_path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + globals.json_path);
  out << doc;
}

void print_report(const TheoremReport& r) {
  std::cout << r.statement << ": " << to_string(r.verdict);
  if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
  std::cout << "\n";
  for (const auto& c : r.clauses) {
    std::cout << "  " << c.name << ": " << to_string(c.verdict);
    if (!c.instantiated) std::cout << " [vacuous]";
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
  }
}

int exit_for(const TheoremReport& r) {
  if (r.verdict == Verdict::kFails) return 1;
  if (r.verdict == Verdict::kSkipped) return 3;
  return 0;
}

int run_analyze(const Globals& globals, const std::string& group, const std::string& subgroup,
                const std::string& pi_text) {
  const CatalogEntry entry = resolve_group(group);
  const PermutationGroup& g = entry.group();
  const Bounds& b = globals.bounds;
  std::optional<PrimeSet> pi;
  if (!pi_text.empty()) pi = PrimeSet::parse(pi_text);

  std::optional<PermutationGroup> h;
  if (!subgroup.empty()) {
    h = resolve_subgroup(entry, subgroup);
  } else if (pi) {
    h = hall(g, *pi, b);
    if (!h) throw InvalidInput("no Hall " + pi->to_string() + "-subgroup");
  } else if (entry.has_subgroup("H")) {
    h = entry.subgroup("H");
  } else {
    throw InvalidInput("analyze needs --subgroup or --pi");
  }
  if (!pi) pi = PrimeSet::of_order(h->order());

  std::cout << "group " << entry.name() << "  degree " << g.degree() << "  order " << g.order() << "\n";
  std::cout << "subgroup order " << h->order() << "  generators " << format_generators(h->generators()) << "\n";
  std::cout << "pi " << pi->to_string() << "\n";
  const TIWitness ti = is_ti(g, *h, b);
  const PermutationGroup n = normalizer(g, *h, b);
  std::cout << "ti " << (ti.ti ? "yes" : "no") << "\n";
  std::cout << "normal " << (is_normal(g, *h) ? "yes" : "no") << "\n";
  std::cout << "normalizer order " << n.order() << "\n";
  std::cout << "hall in group " << (is_hall_in(*h, g) ? "yes" : "no") << "\n";
  std::cout << "hall in normalizer " << (is_hall_in(*h, n) ? "yes" : "no") << "\n";
  const PiSeries series = pi_series(g, *pi, b);
  std::cout << "pi-separable " << (series.separable ? "yes" : "no");
  if (series.pi_length) std::cout << "  pi-length " << *series.pi_length;
  std::cout << "\n";
  std::cout << "pi'-core order " << pi_core(g, pi->complement_in(g.order()), b).order() << "\n";

  const TIHallAnalysis analysis = analyze_ti_hall(g, *h, b);
  for (const auto& cf : analysis.chief_factors) {
    std::cout << "chief factor order " << cf.factor.order() << "  max fixed " << cf.max_fixed << "\n";
  }
  print_report(analysis.report);
  write_json(globals, to_json(analysis.report));
  return exit_for(analysis.report);
}

int run_kernel(const Globals& globals, const std::string& group, const std::string& subgroup) {
  const CatalogEntry entry = resolve_group(group);
  const PermutationGroup h = resolve_subgroup(entry, subgroup.empty() ? "H" : subgroup);
  const KernelResult res = frobenius_kernel(entry.group(), h, globals.bounds);
  if (res.kernel) {
    std::cout << "kernel order " << res.kernel->order() << "  generators "
              << format_generators(res.kernel->generators()) << "\n";
  }
  print_report(res.report);
  write_json(globals, to_json(res.report));
  return exit_for(res.report);
}

int run_check(const Globals& globals, const std::vector<std::string>& suites, const std::string& filter,
              bool include_stretch, bool all_certificates) {
  SuiteConfig config;
  config.suites = suites;
  config.filter = filter;
  config.bounds = globals.bounds;
  config.seed = globals.seed;
  config.include_stretch = include_stretch;
  config.all_certificates = all_certificates;
  const RunReport report = run_suite(config);

  std::map<std::string, std::map<Verdict, std::size_t>> tally;
  for (const auto& r : report.results) ++tally[r.report.statement][r.report.verdict];
  std::cout << "statement                   HOLDS   FAILS  N/A     SKIPPED\n";
  for (const auto& id : report.config.suites) {
    auto& t = tally[id];
    std::cout << id << std::string(id.size() < 28 ? 28 - id.size() : 1, ' ') << t[Verdict::kHolds] << "\t"
              << t[Verdict::kFails] << "\t" << t[Verdict::kNotApplicable] << "\t" << t[Verdict::kSkipped] << "\n";
  }
  for (const auto& r : report.results) {
    if (r.report.verdict != Verdict::kFails && r.report.verdict != Verdict::kSkipped) continue;
    std::cout << to_string(r.report.verdict) << " " << r.group << " [" << r.subject << "] " << r.report.statement;
    for (const auto& c : r.report.clauses) {
      if (c.verdict == r.report.verdict) std::cout << " " << c.name << ": " << c.detail;
    }
    std::cout << "\n";
  }
  std::cout << "total " << report.results.size() << "  fails " << report.count(Verdict::kFails) << "  skipped "
            << report.count(Verdict::kSkipped) << "\n";
  write_json(globals, to_json(report));
  return report.exit_code();
}

int run_catalog(const Globals& globals, bool tags, const std::string& show) {
  if (!show.empty()) {
    const CatalogEntry* e = find_entry(show);
    if (!e) throw InvalidInput("no catalog entry named '" + show + "'");
    std::cout << format_spec(e->spec());
    return 0;
  }
  std::string doc = "[\n";
  bool first = true;
  for (const auto& e : catalog()) {
    const auto order = e.expected("order");
    std::cout << e.name() << "\t" << (order ? std::to_string(*order) : "?");
    if (tags) {
      std::cout << "\t";
      for (std::size_t i = 0; i < e.spec().tags.size(); ++i) std::cout << (i ? "," : "") << e.spec().tags[i];
    }
    std::cout << "\n";
    doc += std::string(first ? "" : ",\n") + "  \"" + e.name() + "\"";
    first = false;
  }
  doc += "\n]\n";
  write_json(globals, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tigroup: finite permutation groups and T.I. subgroups"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--bound-enum", globals.bounds.enumeration, "largest element enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound-subgroups", globals.bounds.subgroups, "largest order for subgroup-lattice work")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound-iso", globals.bounds.isomorphism, "largest order for isomorphism tests")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", globals.seed, "recorded in reports; evaluation is deterministic");
  app.add_option("--json", globals.json_path, "write the structured report to this path");

  std::string group, subgroup, pi, filter, show;
  std::vector<std::string> suites;
  bool include_stretch = false, all_certificates = false, tags = false;

  auto* analyze = app.add_subcommand("analyze", "T.I. and Hall structure of a subgroup");
  analyze->add_option("--group", group, "catalog name or spec file")->required();
  analyze->add_option("--subgroup", subgroup, "subgroup label or generators like \"(0 1 2), (3 4)\"");
  analyze->add_option("--pi", pi, "prime set like 2,3");

  auto* check = app.add_subcommand("check", "run statement suites over the catalog");
  check->add_option("--suite", suites, "statement ids or all")->required()->delimiter(',');
  check->add_option("--filter", filter, "tag expression, e.g. \"frobenius and not stretch\"");
  check->add_flag("--include-stretch", include_stretch, "also run entries tagged stretch");
  check->add_flag("--all-certificates", all_certificates, "emit certificates of every result");

  auto* kernel = app.add_subcommand("kernel", "Frobenius kernel by set difference");
  kernel->add_option("--group", group, "catalog name or spec file")->required();
  kernel->add_option("--subgroup", subgroup, "complement label or generators (default H)");

  auto* cat = app.add_subcommand("catalog", "list catalog entries");
  cat->add_flag("--tags", tags, "show tags");
  cat->add_option("--show", show, "print one entry as a group spec");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*analyze) return run_analyze(globals, group, subgroup, pi);
    if (*kernel) return run_kernel(globals, group, subgroup);
    if (*check) return run_check(globals, suites, filter, include_stretch, all_certificates);
    return run_catalog(globals, tags, show);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
