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

#include <gtest/gtest.h>

#include "tigroup/corpus/catalog.h"
#include "tigroup/permcore/errors.h"
#include "tigroup/thmcheck/filter.h"
#include "tigroup/thmcheck/suite.h"

namespace tig {
namespace {

GroupSpec spec_with(std::string name, std::vector<std::string> tags) {
  GroupSpec s;
  s.name = std::move(name);
  s.tags = std::move(tags);
  return s;
}

TEST(TagFilter, Grammar) {
  const GroupSpec a = spec_with("f20", {"frobenius", "small"});
  const GroupSpec b = spec_with("big", {"stretch"});
  EXPECT_TRUE(TagFilter::parse("").matches(a));
  EXPECT_TRUE(TagFilter::parse("frobenius").matches(a));
  EXPECT_FALSE(TagFilter::parse("frobenius").matches(b));
  EXPECT_TRUE(TagFilter::parse("not stretch").matches(a));
  EXPECT_FALSE(TagFilter::parse("not stretch").matches(b));
  EXPECT_TRUE(TagFilter::parse("frobenius and small").matches(a));
  EXPECT_TRUE(TagFilter::parse("stretch or small").matches(b));
  EXPECT_FALSE(TagFilter::parse("not (stretch or small)").matches(a));
  EXPECT_TRUE(TagFilter::parse("name:f20").matches(a));
  EXPECT_FALSE(TagFilter::parse("name:f20").matches(b));
  // and binds tighter than or
  EXPECT_TRUE(TagFilter::parse("stretch or frobenius and small").matches(a));
  EXPECT_FALSE(TagFilter::parse("(stretch or frobenius) and not small").matches(a));
}

TEST(TagFilter, SyntaxErrors) {
  for (const char* bad : {"(", "frobenius and", "and small", "a b", "not", "name:", "(a))", "a or or b"}) {
    EXPECT_THROW(TagFilter::parse(bad), InvalidInput) << bad;
  }
}

TEST(Suite, RegistryAndResolution) {
  const auto& reg = statement_registry();
  EXPECT_EQ(reg.size(), 15u);
  EXPECT_EQ(resolve_suites({"all"}).size(), reg.size());
  EXPECT_EQ(resolve_suites({"ti_image", "frobenius_kernel"}),
            (std::vector<std::string>{"frobenius_kernel", "ti_image"}));
  EXPECT_THROW(resolve_suites({"nonsense"}), InvalidInput);
}

TEST(Suite, EmptySuiteListGivesEmptyReport) {
  const RunReport r = run_suite(SuiteConfig{});
  EXPECT_TRUE(r.results.empty());
  EXPECT_EQ(r.exit_code(), 0);
  const std::string json = to_json(r);
  EXPECT_NE(json.find("\"total\": 0"), std::string::npos);
  EXPECT_NE(json.find("\"format\": \"tigroup-report/1\""), std::string::npos);
}

TEST(Suite, KernelOnFrobeniusTag) {
  SuiteConfig c;
  c.suites = {"frobenius_kernel"};
  c.filter = "frobenius";
  const RunReport r = run_suite(c);
  std::set<std::string> verified;
  for (const auto& rec : r.results) {
    EXPECT_NE(rec.report.verdict, Verdict::kFails) << rec.group << " " << rec.subject;
    EXPECT_TRUE(rec.certificate_verified);
    if (rec.subject == "H") {
      EXPECT_EQ(rec.report.verdict, Verdict::kHolds) << rec.group;
      verified.insert(rec.group);
    }
  }
  std::size_t tagged = 0;
  for (const auto& e : catalog()) tagged += e.has_tag("frobenius") ? 1 : 0;
  EXPECT_EQ(verified.size(), tagged);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Suite, DeterministicJson) {
  SuiteConfig c;
  c.suites = {"all"};
  c.filter = "small and not double-frobenius";
  c.all_certificates = true;
  EXPECT_EQ(to_json(run_suite(c)), to_json(run_suite(c)));
}

TEST(Suite, BoundsProduceSkipped) {
  SuiteConfig c;
  c.suites = {"ti_hall_structure"};
  c.filter = "name:sl2_32_c5";
  c.bounds.enumeration = 1000;
  const RunReport r = run_suite(c);
  ASSERT_FALSE(r.results.empty());
  EXPECT_GT(r.count(Verdict::kSkipped), 0u);
  EXPECT_EQ(r.count(Verdict::kFails), 0u);
  EXPECT_EQ(r.exit_code(), 3);
}

TEST(Suite, StretchExcludedByDefault) {
  SuiteConfig c;
  c.suites = {"frobenius_kernel"};
  c.filter = "stretch";
  EXPECT_TRUE(run_suite(c).results.empty());
}

TEST(Suite, ConfigFaults) {
  SuiteConfig c;
  c.suites = {"all"};
  c.bounds.subgroups = 0;
  EXPECT_THROW(run_suite(c), InvalidInput);
  c.bounds = Bounds{};
  c.filter = "(";
  EXPECT_THROW(run_suite(c), InvalidInput);
}

TEST(Suite, SummaryMatchesTally) {
  SuiteConfig c;
  c.suites = {"hall_via_normalizer", "coprime_action"};
  c.filter = "small";
  const RunReport r = run_suite(c);
  std::size_t total = 0;
  for (auto v : {Verdict::kHolds, Verdict::kFails, Verdict::kNotApplicable, Verdict::kSkipped}) total += r.count(v);
  EXPECT_EQ(total, r.results.size());
  EXPECT_GT(r.count(Verdict::kHolds), 0u);
}

TEST(Suite, SubjectsAreLabelled) {
  const CatalogEntry& f42 = *find_entry("f42");
  const auto subs = subjects_for(f42, SubjectKind::kSubgroup, Bounds{});
  ASSERT_GE(subs.size(), 2u);
  EXPECT_EQ(subs[0].label, "H");
  EXPECT_EQ(subs[1].label, "P3");
  for (std::size_t i = 2; i < subs.size(); ++i) EXPECT_EQ(subs[i].label.rfind("class", 0), 0u);
  const auto primes = subjects_for(f42, SubjectKind::kPrime, Bounds{});
  ASSERT_EQ(primes.size(), 3u);
  EXPECT_EQ(primes[0].label, "p=2");
}

}  // namespace
}  // namespace tig
