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

#include <filesystem>

#include <gtest/gtest.h>

#include "tigroup/corpus/catalog.h"
#include "tigroup/corpus/constructors.h"
#include "tigroup/corpus/spec.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"

namespace tig {
namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

TEST(Constructors, OrdersMatchFormulas) {
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(cyclic(n).order(), n);
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(dihedral(n).order(), 2 * n);
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(symmetric(n).order(), factorial(n));
  for (std::size_t n = 3; n <= 7; ++n) EXPECT_EQ(alternating(n).order(), factorial(n) / 2);
  for (std::size_t o : {8u, 16u, 32u}) EXPECT_EQ(generalized_quaternion(o).order(), o);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u, 128u}) {
    const std::uint64_t qq = q;
    EXPECT_EQ(sl2(q).order(), qq * (qq * qq - 1)) << q;
    const std::uint64_t d = q % 2 == 0 ? 1 : 2;
    EXPECT_EQ(psl2(q).order(), qq * (qq * qq - 1) / d) << q;
  }
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    EXPECT_EQ(affine_group(q, q - 1).order(), std::uint64_t{q} * (q - 1)) << q;
  }
  EXPECT_EQ(direct_product(cyclic(4), symmetric(3)).order(), 24u);
  EXPECT_THROW(dihedral(2), InvalidInput);
  EXPECT_THROW(generalized_quaternion(12), InvalidInput);
  EXPECT_THROW(sl2(6), InvalidInput);
  EXPECT_THROW(affine_group(7, 4), InvalidInput);
}

TEST(Constructors, FieldAutomorphismExtension) {
  const PermutationGroup g = field_aut_extension(32, 5);
  EXPECT_EQ(g.order(), 163680u);
  const Permutation alpha = field_automorphism(32, 5);
  EXPECT_EQ(alpha.order(), 5u);
  const PermutationGroup n = sl2(32);
  EXPECT_TRUE(normalizes(PermutationGroup(n.degree(), {alpha}), n));
  EXPECT_EQ(centralizer(n, alpha).order(), 6u);
  const PermutationGroup big = field_aut_extension(128, 7);
  EXPECT_EQ(big.order(), 14679168u);
  EXPECT_EQ(field_automorphism(128, 7).order(), 7u);
  EXPECT_THROW(field_automorphism(32, 3), InvalidInput);
}

TEST(Constructors, SemidirectRejectsNonNormalizingPerms) {
  const PermutationGroup c3(4, {Permutation::from_cycles(4, {{0, 1, 2}})});
  EXPECT_THROW(semidirect_by_normalizing_perms(c3, {Permutation::from_cycles(4, {{2, 3}})}), InvalidInput);
  EXPECT_EQ(semidirect_by_normalizing_perms(c3, {Permutation::from_cycles(4, {{0, 1}})}).order(), 6u);
}

TEST(Catalog, DistinguishedEntries) {
  const CatalogEntry* a5 = find_entry("a5_sylow5");
  ASSERT_NE(a5, nullptr);
  EXPECT_EQ(a5->subgroup("H").order(), 5u);
  const CatalogEntry* big = find_entry("sl2_128_c7");
  ASSERT_NE(big, nullptr);
  EXPECT_TRUE(big->has_tag("stretch"));
  for (const char* name : {"sl2_32_c5", "f20", "f21", "f42", "s3", "s4", "dfrob_42", "c15_c2", "agl1_11",
                           "c2cube_c7"}) {
    EXPECT_NE(find_entry(name), nullptr) << name;
  }
  EXPECT_EQ(find_entry("no_such_group"), nullptr);
  EXPECT_GE(catalog().size(), 100u);
}

TEST(Catalog, EveryOrderUpTo63HasAnEntry) {
  std::set<std::uint64_t> orders;
  for (const auto& e : catalog()) orders.insert(*e.expected("order"));
  for (std::uint64_t n = 1; n <= 63; ++n) EXPECT_TRUE(orders.count(n)) << n;
}

TEST(Catalog, EntriesAreConsistent) {
  std::set<std::string> names;
  for (const auto& e : catalog()) {
    EXPECT_TRUE(names.insert(e.name()).second) << e.name();
    if (e.has_tag("stretch")) continue;
    const PermutationGroup& g = e.group();
    EXPECT_EQ(g.order(), *e.expected("order")) << e.name();
    for (const auto& [label, gens] : e.spec().subgroups) {
      const PermutationGroup h = e.subgroup(label);
      EXPECT_TRUE(g.contains(h)) << e.name() << " " << label;
      if (auto o = e.expected(label + ".order")) {
        EXPECT_EQ(h.order(), *o) << e.name() << " " << label;
      }
    }
    EXPECT_EQ(parse_spec(format_spec(e.spec())), e.spec()) << e.name();
  }
}

TEST(GroupSpec, RoundTripThroughFile) {
  const auto dir = std::filesystem::temp_directory_path() / "tigroup_spec_test";
  std::filesystem::create_directories(dir);
  for (const auto& e : catalog()) {
    const auto path = dir / (e.name() + ".spec");
    save_spec(path, e.spec());
    EXPECT_EQ(load_spec(path), e.spec()) << e.name();
  }
  std::filesystem::remove_all(dir);
}

TEST(GroupSpec, ParsesCommentsAndSubgroups) {
  const GroupSpec s = parse_spec(
      "format = tigroup-groupspec/1\n"
      "# symmetric group on three points\n"
      "name = s3\n"
      "\n"
      "degree = 3\n"
      "generator = (0 1 2)\n"
      "generator = (0 1)\n"
      "tag = frobenius\n"
      "subgroup H = (0 1)\n"
      "expect order = 6\n");
  EXPECT_EQ(s.name, "s3");
  EXPECT_EQ(s.degree, 3u);
  EXPECT_EQ(s.generators.size(), 2u);
  EXPECT_TRUE(s.has_tag("frobenius"));
  EXPECT_EQ(build_group(s).order(), 6u);
  EXPECT_EQ(build_subgroup(s, "H").order(), 2u);
  EXPECT_THROW(build_subgroup(s, "K"), InvalidInput);
}

void expect_parse_error(const std::string& text, std::size_t line) {
  try {
    parse_spec(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_GE(e.column(), 1u);
  }
}

TEST(GroupSpec, StrictErrors) {
  const std::string head = "format = tigroup-groupspec/1\nname = x\ndegree = 3\n";
  expect_parse_error("name = x\n", 1);
  expect_parse_error("format = tigroup-groupspec/9\n", 1);
  expect_parse_error(head + "generator = (0 1\n", 4);
  expect_parse_error(head + "generator = (0 7)\n", 4);
  expect_parse_error(head + "colour = red\n", 4);
  expect_parse_error(head + "name = y\n", 4);
  expect_parse_error(head + "expect order = six\n", 4);
  expect_parse_error(head + "generator (0 1)\n", 4);
  EXPECT_THROW(load_spec("/nonexistent/path.spec"), std::exception);
}

TEST(GroupSpec, GeneratorListRoundTrip) {
  const PermutationGroup g = symmetric(5);
  const std::string text = format_generators(g.generators());
  EXPECT_EQ(parse_generator_list(text, 5), g.generators());
  EXPECT_THROW(parse_generator_list("(0 1), (1 9)", 5), InvalidInput);
}

}  // namespace
}  // namespace tig
