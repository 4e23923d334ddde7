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

#include <random>

#include <gtest/gtest.h>

#include "oracle.h"
#include "tigroup/corpus/catalog.h"
#include "tigroup/corpus/constructors.h"
#include "tigroup/permcore/errors.h"
#include "tigroup/permcore/perm_group.h"

namespace tig {
namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

TEST(Permutation, ComposesLeftToRight) {
  EXPECT_TRUE((cyc(2, {{0, 1}}) * cyc(2, {{0, 1}})).is_identity());
  EXPECT_EQ(cyc(3, {{0, 1, 2}}) * cyc(3, {{0, 1}}), cyc(3, {{1, 2}}));
  const Permutation a = cyc(5, {{0, 3}, {1, 4, 2}});
  EXPECT_EQ(a * Permutation::identity(5), a);
  EXPECT_EQ(compose(a, a.inverse()), Permutation::identity(5));
}

TEST(Permutation, ComposeRejectsDegreeMismatch) {
  EXPECT_THROW(compose(Permutation::identity(3), Permutation::identity(4)), InvalidInput);
}

TEST(Permutation, Inverse) {
  EXPECT_EQ(cyc(3, {{0, 1, 2}}).inverse(), cyc(3, {{0, 2, 1}}));
  EXPECT_TRUE(Permutation::identity(4).inverse().is_identity());
  const Permutation v = cyc(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(v.inverse(), v);
}

TEST(Permutation, ParsesCycleNotation) {
  const Permutation p = parse_permutation("(0 1 2)", 5);
  const std::vector<Point> want{1, 2, 0, 3, 4};
  EXPECT_TRUE(std::equal(p.images().begin(), p.images().end(), want.begin(), want.end()));
  EXPECT_TRUE(parse_permutation("()", 4).is_identity());
  EXPECT_EQ(parse_permutation(" (0 3)( 1 2 ) ", 4), cyc(4, {{0, 3}, {1, 2}}));
}

TEST(Permutation, RejectsMalformedCycles) {
  EXPECT_THROW(parse_permutation("(0 1)(1 2)", 3), InvalidInput);
  EXPECT_THROW(parse_permutation("(0 5)", 3), InvalidInput);
  EXPECT_THROW(parse_permutation("(0 1", 3), InvalidInput);
  EXPECT_THROW(parse_permutation("0 1)", 3), InvalidInput);
  EXPECT_THROW(parse_permutation("(0 x)", 3), InvalidInput);
  EXPECT_THROW(parse_permutation("(0 0)", 3), InvalidInput);
}

TEST(Permutation, CycleStringRoundTrips) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Permutation p = random_perm(1 + i % 12, rng);
    EXPECT_EQ(parse_permutation(to_cycle_string(p), p.degree()), p);
  }
  EXPECT_EQ(to_cycle_string(Permutation::identity(3)), "()");
}

TEST(Permutation, GroupLawsOnRandomElements) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 12);
    const Permutation a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(a.conjugate_by(b), b.inverse() * a * b);
    EXPECT_TRUE(a.pow(a.order()).is_identity());
    Permutation self = a;
    self *= self;
    EXPECT_EQ(self, a * a);
  }
}

TEST(PermutationGroup, OrdersOfSmallExamples) {
  EXPECT_EQ(PermutationGroup(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})}).order(), 6u);
  const PermutationGroup a5(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})});
  EXPECT_EQ(a5.order(), 60u);
  EXPECT_EQ(oracle::elements(a5).size(), 60u);
  EXPECT_EQ(PermutationGroup::trivial(4).order(), 1u);
}

TEST(PermutationGroup, Membership) {
  const PermutationGroup s3 = symmetric(3);
  EXPECT_TRUE(s3.contains(cyc(3, {{0, 1}})));
  const PermutationGroup a5 = alternating(5);
  EXPECT_FALSE(a5.contains(cyc(5, {{0, 1}})));
  EXPECT_TRUE(a5.contains(cyc(5, {{0, 1}, {2, 3}})));
  EXPECT_THROW(a5.contains(Permutation::identity(4)), InvalidInput);
}

TEST(PermutationGroup, ElementsEnumeration) {
  EXPECT_EQ(elements(PermutationGroup::trivial(3)).size(), 1u);
  EXPECT_EQ(elements(symmetric(3)).size(), 6u);
  const PermutationGroup c5 = cyclic(5);
  const auto els = elements(c5);
  ASSERT_EQ(els.size(), 5u);
  const oracle::ElemSet want = oracle::elements(c5);
  EXPECT_EQ(oracle::ElemSet(els.begin(), els.end()), want);
}

TEST(PermutationGroup, EnumerationRespectsBound) {
  EXPECT_THROW(elements(symmetric(7), Bounds{.enumeration = 100}), BoundExceeded);
}

// Chain order and membership against closure enumeration on every catalog
// group small enough to enumerate.
TEST(PermutationGroup, ChainAgreesWithEnumerationOnCatalog) {
  std::mt19937_64 rng(3);
  std::size_t pairs = 0;
  for (const auto& e : catalog()) {
    if (*e.expected("order") > 5000) continue;
    const PermutationGroup& g = e.group();
    const oracle::ElemSet all = oracle::elements(g);
    ASSERT_EQ(g.order(), all.size()) << e.name();
    std::uint64_t product = 1;
    for (const auto& level : g.chain().levels()) product *= level.orbit.size();
    EXPECT_EQ(product, g.order()) << e.name();
    for (int i = 0; i < 10; ++i, ++pairs) {
      const Permutation x = random_perm(g.degree(), rng);
      EXPECT_EQ(g.contains(x), all.count(x) == 1) << e.name();
      const Permutation y = *std::next(all.begin(), static_cast<std::ptrdiff_t>(rng() % all.size()));
      EXPECT_TRUE(g.contains(y)) << e.name();
    }
  }
  EXPECT_GE(pairs, 1000u);
}

TEST(PermutationGroup, ChainIsDeterministic) {
  for (const auto& e : catalog()) {
    if (e.has_tag("stretch")) continue;
    const auto a = StabilizerChain::build(e.group().degree(), e.group().generators());
    const auto b = StabilizerChain::build(e.group().degree(), e.group().generators());
    EXPECT_EQ(a.base(), b.base()) << e.name();
    EXPECT_EQ(a.order(), b.order()) << e.name();
    EXPECT_EQ(a.strong_generators(), b.strong_generators()) << e.name();
  }
}

TEST(PermutationGroup, RankUnrankIsABijection) {
  const PermutationGroup g = symmetric(5);
  std::set<std::uint64_t> seen;
  for (const auto& x : elements(g)) {
    const auto r = g.chain().rank(x);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(g.chain().unrank(*r), x);
    seen.insert(*r);
  }
  EXPECT_EQ(seen.size(), 120u);
  EXPECT_FALSE(alternating(5).chain().rank(cyc(5, {{0, 1}})).has_value());
}

}  // namespace
}  // namespace tig
