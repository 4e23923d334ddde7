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

#include <numeric>

#include <gtest/gtest.h>

#include "oracle.h"
#include "tigroup/coact/coprime.h"
#include "tigroup/coact/fusion.h"
#include "tigroup/corpus/catalog.h"
#include "tigroup/corpus/constructors.h"
#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"

namespace tig {
namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

const Clause* clause(const TheoremReport& r, const std::string& name) {
  for (const auto& c : r.clauses) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CoprimeActionPair c15_pair() {
  const CatalogEntry& e = *find_entry("c15_c2");
  return make_pair(e.group(), e.subgroup("N"), e.subgroup("A"));
}

// x -> 2x on C7 inside F21.
CoprimeActionPair c7_c3_pair() {
  const PermutationGroup c7 = cyclic(7);
  const PermutationGroup a(7, {cyc(7, {{1, 2, 4}, {3, 6, 5}})});
  return make_pair(join(c7, a), c7, a);
}

TEST(CoprimePair, Validation) {
  const CoprimeActionPair p = c15_pair();
  EXPECT_EQ(p.parent.order(), 30u);
  const PermutationGroup c15 = p.g_part;
  EXPECT_NO_THROW(make_pair(c15, c15, PermutationGroup::trivial(c15.degree())));
  const PermutationGroup s3 = symmetric(3);
  EXPECT_THROW(make_pair(s3, sylow(s3, 3), sylow(s3, 3)), InvalidInput);
  const PermutationGroup s4 = symmetric(4);
  EXPECT_THROW(make_pair(s4, alternating(4), PermutationGroup(4, {cyc(4, {{0, 1}, {2, 3}})})), InvalidInput);
  EXPECT_THROW(make_pair(s4, sylow(s4, 3), sylow(s4, 2)), InvalidInput);
}

TEST(CoprimePair, FixedAndCommutator) {
  const CoprimeActionPair p = c15_pair();
  const PermutationGroup c = fixed_subgroup(p);
  const PermutationGroup k = commutator_ga(p);
  EXPECT_EQ(c.order(), 5u);
  EXPECT_EQ(k.order(), 3u);
  EXPECT_TRUE(intersection(c, k).is_trivial());
  EXPECT_TRUE(is_cyclic(k));
  EXPECT_EQ(oracle::elements(c), oracle::centralizer(oracle::elements(p.g_part), oracle::elements(p.a_part)));

  const CoprimeActionPair t = make_pair(p.g_part, p.g_part, PermutationGroup::trivial(p.g_part.degree()));
  EXPECT_TRUE(same_group(fixed_subgroup(t), p.g_part));
  EXPECT_TRUE(commutator_ga(t).is_trivial());

  const CoprimeActionPair f21 = c7_c3_pair();
  EXPECT_TRUE(fixed_subgroup(f21).is_trivial());
  EXPECT_EQ(commutator_ga(f21).order(), 7u);
}

TEST(CoprimePair, IdentitiesHold) {
  const TheoremReport r = check_coprime_identities(c15_pair());
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  for (const char* name : {"product", "abelian_direct", "commutator_idempotent", "invariant_sylow"}) {
    ASSERT_NE(clause(r, name), nullptr) << name;
    EXPECT_EQ(clause(r, name)->verdict, Verdict::kHolds) << name;
  }
  EXPECT_TRUE(recheck(r.certificate).ok);
  const CoprimeActionPair c15 = c15_pair();
  EXPECT_EQ(check_coprime_identities(make_pair(c15.g_part, c15.g_part, PermutationGroup::trivial(8))).verdict,
            Verdict::kHolds);
  EXPECT_EQ(check_coprime_identities(c7_c3_pair()).verdict, Verdict::kHolds);
}

TEST(CoprimePair, CyclicSylowAction) {
  const TheoremReport r = check_cyclic_sylow_action(c15_pair());
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(check_cyclic_sylow_action(c7_c3_pair()).verdict, Verdict::kHolds);
  // Klein four Sylow subgroup: A4 = V4 x| C3.
  const PermutationGroup a4 = alternating(4);
  const CoprimeActionPair v4 = make_pair(a4, sylow(a4, 2), sylow(a4, 3));
  EXPECT_EQ(check_cyclic_sylow_action(v4).verdict, Verdict::kNotApplicable);
}

// Fixed subgroup times commutator equals |G| when Sylow subgroups are cyclic,
// and conjugating the pair conjugates both.
TEST(CoprimePair, SweepPropertiesOverCatalog) {
  std::size_t pairs = 0;
  for (const auto& e : catalog()) {
    if (e.has_tag("stretch") || *e.expected("order") > 200) continue;
    const PermutationGroup& g = e.group();
    const auto& classes = *subgroup_classes(g);
    for (const auto& n : *normal_subgroups(g)) {
      if (n.is_trivial() || n.order() == g.order()) continue;
      for (const auto& c : classes) {
        const PermutationGroup& a = c.representative;
        if (n.order() * a.order() != g.order() || std::gcd(n.order(), a.order()) != 1) continue;
        const CoprimeActionPair p = make_pair(g, n, a);
        const PermutationGroup fixed = fixed_subgroup(p);
        const PermutationGroup comm = commutator_ga(p);
        if (check_cyclic_sylow_action(p).verdict == Verdict::kHolds) {
          EXPECT_EQ(fixed.order() * comm.order(), n.order()) << e.name();
        }
        const Permutation t = g.generators()[0];
        const CoprimeActionPair q = make_pair(g, n, conjugate(a, t));
        EXPECT_TRUE(same_group(fixed_subgroup(q), conjugate(fixed, t))) << e.name();
        EXPECT_TRUE(same_group(commutator_ga(q), conjugate(comm, t))) << e.name();
        ++pairs;
      }
    }
  }
  EXPECT_GT(pairs, 50u);
}

TEST(Fusion, Examples) {
  const CatalogEntry& f20 = *find_entry("f20");
  const PermutationGroup h = f20.subgroup("H");
  EXPECT_TRUE(controls_fusion(h, h, f20.group()).controls);
  EXPECT_TRUE(controls_fusion(f20.group(), h, f20.group()).controls);
  const PermutationGroup a5 = alternating(5);
  const PermutationGroup p = sylow(a5, 5);
  const FusionResult r = controls_fusion(p, p, a5);
  EXPECT_FALSE(r.controls);
  ASSERT_TRUE(r.x && r.y && r.t);
  EXPECT_EQ(r.x->conjugate_by(*r.t), *r.y);
  EXPECT_TRUE(controls_fusion(normalizer(a5, p), p, a5).controls);
}

TEST(Fusion, MonotoneInK) {
  for (const char* name : {"s4", "a4", "f42", "d8", "s5"}) {
    const CatalogEntry* e = find_entry(name);
    if (!e) continue;
    const PermutationGroup& g = e->group();
    for (auto q : prime_divisors(g.order())) {
      const PermutationGroup h = sylow(g, q);
      const PermutationGroup n = normalizer(g, h);
      if (controls_fusion(h, h, g).controls) {
        EXPECT_TRUE(controls_fusion(n, h, g).controls) << name;
      }
      EXPECT_TRUE(controls_fusion(g, h, g).controls);
    }
  }
}

TEST(NormalPComplement, Examples) {
  const PermutationGroup s3 = symmetric(3);
  const auto c = normal_p_complement(s3, 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->order(), 3u);
  EXPECT_FALSE(normal_p_complement(s3, 3).has_value());
  EXPECT_EQ(check_normal_p_complement(s3, 2).verdict, Verdict::kHolds);
  EXPECT_EQ(check_normal_p_complement(s3, 3).verdict, Verdict::kHolds);
  EXPECT_EQ(check_normal_p_complement(s3, 5).verdict, Verdict::kNotApplicable);
  const PermutationGroup c12 = cyclic(12);
  for (std::uint64_t p : {2u, 3u}) {
    EXPECT_TRUE(normal_p_complement(c12, p).has_value());
    EXPECT_EQ(check_normal_p_complement(c12, p).verdict, Verdict::kHolds);
  }
}

TEST(FusionComplement, Examples) {
  const CatalogEntry& f20 = *find_entry("f20");
  EXPECT_EQ(check_fusion_complement(f20.group(), f20.subgroup("H")).verdict, Verdict::kHolds);
  const PermutationGroup a5 = alternating(5);
  EXPECT_EQ(check_fusion_complement(a5, sylow(a5, 5)).verdict, Verdict::kNotApplicable);
  EXPECT_EQ(check_fusion_complement(a5, a5).verdict, Verdict::kHolds);
}

}  // namespace
}  // namespace tig
