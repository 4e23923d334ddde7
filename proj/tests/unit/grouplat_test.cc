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
#include "tigroup/corpus/catalog.h"
#include "tigroup/corpus/constructors.h"
#include "tigroup/grouplat/isomorphism.h"
#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/section.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"

namespace tig {
namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

PermutationGroup gen(std::size_t n, std::vector<std::vector<std::vector<Point>>> gens) {
  std::vector<Permutation> out;
  for (auto& c : gens) out.push_back(cyc(n, c));
  return PermutationGroup(n, std::move(out));
}

const PermutationGroup& entry(const char* name) { return find_entry(name)->group(); }

oracle::ElemSet as_set(const PermutationGroup& g) { return oracle::elements(g); }

TEST(Subgroups, Closure) {
  const PermutationGroup s4 = symmetric(4);
  EXPECT_EQ(closure(s4, {cyc(4, {{0, 1}})}).order(), 2u);
  EXPECT_EQ(closure(s4, {cyc(4, {{0, 1}}), cyc(4, {{1, 2}})}).order(), 6u);
  EXPECT_TRUE(closure(s4, {}).is_trivial());
  EXPECT_THROW(closure(alternating(4), {cyc(4, {{0, 1}})}), InvalidInput);
}

TEST(Subgroups, NormalizerExamples) {
  const PermutationGroup a5 = alternating(5);
  EXPECT_EQ(normalizer(a5, sylow(a5, 5)).order(), 10u);
  EXPECT_TRUE(same_group(normalizer(a5, a5), a5));
  const PermutationGroup s4 = symmetric(4);
  EXPECT_EQ(normalizer(s4, gen(4, {{{0, 1}}})).order(), 4u);
}

TEST(Subgroups, CentralizerExamples) {
  EXPECT_EQ(centralizer(symmetric(3), cyc(3, {{0, 1, 2}})).order(), 3u);
  EXPECT_EQ(centralizer(symmetric(4), Permutation::identity(4)).order(), 24u);
  const PermutationGroup a5 = alternating(5);
  EXPECT_EQ(centralizer(a5, sylow(a5, 5).generators()[0]).order(), 5u);
}

TEST(Subgroups, CoreNormalClosureCommutator) {
  const PermutationGroup s4 = symmetric(4), a5 = alternating(5);
  EXPECT_EQ(core(s4, sylow(s4, 2)).order(), 4u);
  EXPECT_TRUE(same_group(core(s4, s4), s4));
  EXPECT_TRUE(core(a5, sylow(a5, 5)).is_trivial());
  EXPECT_EQ(normal_closure(s4, std::vector<Permutation>{cyc(4, {{0, 1}})}).order(), 24u);
  EXPECT_TRUE(normal_closure(s4, std::vector<Permutation>{Permutation::identity(4)}).is_trivial());
  EXPECT_EQ(normal_closure(s4, std::vector<Permutation>{cyc(4, {{0, 1}, {2, 3}})}).order(), 4u);
  const PermutationGroup s3 = symmetric(3);
  EXPECT_EQ(commutator(s3, s3).order(), 3u);
  EXPECT_TRUE(commutator(s3, PermutationGroup::trivial(3)).is_trivial());
  const PermutationGroup& f21 = entry("f21");
  const PermutationGroup c7 = gen(7, {{{0, 1, 2, 3, 4, 5, 6}}});
  EXPECT_EQ(commutator(c7, find_entry("f21")->subgroup("H")).order(), 7u);
  EXPECT_EQ(f21.order(), 21u);
}

TEST(Subgroups, DerivedSeries) {
  const auto s4 = derived_series(symmetric(4));
  std::vector<std::uint64_t> orders;
  for (const auto& t : s4) orders.push_back(t.order());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{24, 12, 4, 1}));
  EXPECT_TRUE(is_solvable(symmetric(4)));
  EXPECT_EQ(derived_series(alternating(5)).size(), 1u);
  EXPECT_FALSE(is_solvable(alternating(5)));
  const auto c6 = derived_series(cyclic(6));
  ASSERT_EQ(c6.size(), 2u);
  EXPECT_TRUE(c6[1].is_trivial());
}

TEST(Subgroups, SylowAndHall) {
  EXPECT_EQ(sylow(alternating(5), 5).order(), 5u);
  EXPECT_EQ(sylow(symmetric(4), 2).order(), 8u);
  EXPECT_TRUE(sylow(cyclic(15), 7).is_trivial());
  const PermutationGroup& f42 = entry("f42");
  const auto h6 = hall(f42, PrimeSet{2, 3});
  ASSERT_TRUE(h6.has_value());
  EXPECT_EQ(h6->order(), 6u);
  EXPECT_FALSE(hall(alternating(5), PrimeSet{3, 5}).has_value());
  EXPECT_TRUE(same_group(*hall(f42, PrimeSet{2, 3, 7}), f42));
}

TEST(Subgroups, IsHallIn) {
  const PermutationGroup a5 = alternating(5);
  const PermutationGroup p = sylow(a5, 5);
  EXPECT_TRUE(is_hall_in(p, normalizer(a5, p)));
  const PermutationGroup c4 = cyclic(4);
  EXPECT_FALSE(is_hall_in(closure(c4, {c4.generators()[0].pow(2)}), c4));
  EXPECT_TRUE(is_hall_in(PermutationGroup::trivial(4), c4));
}

TEST(Subgroups, SylowHasFullPPartAndConjugates) {
  for (const auto& e : catalog()) {
    if (e.has_tag("stretch") || *e.expected("order") > 2000) continue;
    const PermutationGroup& g = e.group();
    for (auto p : prime_divisors(g.order())) {
      const PermutationGroup s = sylow(g, p);
      EXPECT_EQ(s.order(), p_part(g.order(), p)) << e.name() << " p=" << p;
      // Sylow of a relabelled generating set is conjugate to the first one.
      std::vector<Permutation> gens = g.generators();
      std::reverse(gens.begin(), gens.end());
      for (auto& x : gens) x = x.conjugate_by(g.generators()[0]);
      const PermutationGroup other = sylow(PermutationGroup(g.degree(), gens), p);
      EXPECT_TRUE(are_conjugate_subgroups(g, s, other).has_value()) << e.name();
    }
  }
}

// Normalizers, centralizers and cores of every class representative against
// element-set brute force.
TEST(Subgroups, NormalizerCentralizerCoreMatchBruteForce) {
  std::size_t checked = 0;
  for (const auto& e : catalog()) {
    if (e.has_tag("stretch") || *e.expected("order") > 200) continue;
    const PermutationGroup& g = e.group();
    const oracle::ElemSet gs = as_set(g);
    for (const auto& c : *subgroup_classes(g)) {
      const PermutationGroup& h = c.representative;
      const oracle::ElemSet hs = as_set(h);
      EXPECT_EQ(as_set(normalizer(g, h)), oracle::normalizer(gs, hs)) << e.name();
      EXPECT_EQ(as_set(centralizer(g, h)), oracle::centralizer(gs, hs)) << e.name();
      oracle::ElemSet core_set = hs;
      for (const auto& x : gs) core_set = oracle::meet(core_set, oracle::conjugate(hs, x));
      EXPECT_EQ(as_set(core(g, h)), core_set) << e.name();
      EXPECT_EQ(is_normal(g, h), oracle::is_normal(gs, hs)) << e.name();
      EXPECT_EQ(g.order() % h.order(), 0u);
      ++checked;
    }
  }
  EXPECT_GT(checked, 500u);
}

TEST(Subgroups, IntersectionMatchesBruteForce) {
  const PermutationGroup s4 = symmetric(4);
  const auto& classes = *subgroup_classes(s4);
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      const PermutationGroup bt = conjugate(b.representative, cyc(4, {{0, 1, 2, 3}}));
      EXPECT_EQ(as_set(intersection(a.representative, bt)),
                oracle::meet(as_set(a.representative), as_set(bt)));
    }
  }
}

TEST(Lattice, SubgroupClassCounts) {
  EXPECT_EQ(subgroup_classes(symmetric(3))->size(), 4u);
  EXPECT_EQ(subgroup_classes(alternating(5))->size(), 9u);
  EXPECT_EQ(subgroup_classes(PermutationGroup::trivial(3))->size(), 1u);
  EXPECT_EQ(subgroup_classes(symmetric(4))->size(), 11u);
  EXPECT_EQ(subgroup_classes(alternating(4))->size(), 5u);
  EXPECT_EQ(subgroup_classes(dihedral(4))->size(), 8u);
  EXPECT_EQ(subgroup_classes(generalized_quaternion(8))->size(), 6u);
  EXPECT_EQ(subgroup_classes(symmetric(5))->size(), 19u);
  EXPECT_EQ(subgroup_classes(cyclic(12))->size(), 6u);
}

// Class sizes add up to the number of subgroups found by closing every
// subset of cyclic subgroups; checked on small groups.
TEST(Lattice, ClassSizesCountAllSubgroups) {
  for (const char* name : {"s4", "d8", "q8", "a4", "f20", "c2xc2xc2"}) {
    const CatalogEntry* e = find_entry(name);
    if (!e) continue;
    const PermutationGroup& g = e->group();
    std::set<oracle::ElemSet> all;
    std::vector<oracle::ElemSet> frontier{oracle::ElemSet{Permutation::identity(g.degree())}};
    all.insert(frontier[0]);
    const auto els = elements(g);
    while (!frontier.empty()) {
      std::vector<oracle::ElemSet> next;
      for (const auto& s : frontier) {
        for (const auto& x : els) {
          if (s.count(x)) continue;
          std::vector<Permutation> gens(s.begin(), s.end());
          gens.push_back(x);
          oracle::ElemSet t = oracle::closure(g.degree(), gens);
          if (all.insert(t).second) next.push_back(std::move(t));
        }
      }
      frontier = std::move(next);
    }
    std::uint64_t total = 0;
    for (const auto& c : *subgroup_classes(g)) total += c.size;
    EXPECT_EQ(total, all.size()) << name;
  }
}

TEST(Lattice, NormalSubgroups) {
  EXPECT_EQ(normal_subgroups(symmetric(4))->size(), 4u);
  EXPECT_EQ(normal_subgroups(alternating(4))->size(), 3u);
  EXPECT_EQ(normal_subgroups(alternating(5))->size(), 2u);
  EXPECT_EQ(normal_subgroups(symmetric(5))->size(), 3u);
  std::vector<std::uint64_t> c6;
  for (const auto& n : *normal_subgroups(cyclic(6))) c6.push_back(n.order());
  EXPECT_EQ(c6, (std::vector<std::uint64_t>{1, 2, 3, 6}));
  for (const auto& e : catalog()) {
    if (e.has_tag("stretch") || *e.expected("order") > 200) continue;
    const PermutationGroup& g = e.group();
    std::size_t normal_classes = 0;
    for (const auto& c : *subgroup_classes(g)) normal_classes += c.size == 1 ? 1 : 0;
    EXPECT_EQ(normal_subgroups(g)->size(), normal_classes) << e.name();
  }
}

TEST(Lattice, ChiefSeries) {
  std::vector<std::uint64_t> orders;
  for (const auto& f : chief_series(symmetric(4))) orders.push_back(f.order());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{4, 3, 2}));
  const auto a5 = chief_series(alternating(5));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_EQ(a5[0].order(), 60u);
}

TEST(Lattice, ChiefFactorsAreCharacteristicallySimple) {
  for (const auto& e : catalog()) {
    if (e.has_tag("stretch") || *e.expected("order") > 2000) continue;
    const PermutationGroup& g = e.group();
    std::uint64_t product = 1;
    for (const auto& f : chief_series(g)) {
      product *= f.order();
      EXPECT_TRUE(is_normal(g, f.top()) && is_normal(g, f.bottom())) << e.name();
      // No normal subgroup of G lies strictly between the terms.
      for (const auto& m : *normal_subgroups(g)) {
        const bool between = f.top().contains(m) && m.contains(f.bottom()) && m.order() != f.top().order() &&
                             m.order() != f.bottom().order();
        EXPECT_FALSE(between) << e.name();
      }
      if (is_abelian(f.quotient())) {
        EXPECT_TRUE(is_elementary_abelian(f.quotient())) << e.name();
      }
    }
    EXPECT_EQ(product, g.order()) << e.name();
  }
}

TEST(Lattice, ConjugacyClasses) {
  std::vector<std::uint64_t> sizes;
  for (const auto& c : conjugacy_classes(symmetric(3))->classes) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{1, 2, 3}));
  sizes.clear();
  for (const auto& c : conjugacy_classes(alternating(5))->classes) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{1, 12, 12, 15, 20}));
  EXPECT_EQ(conjugacy_classes(cyclic(9))->classes.size(), 9u);
}

TEST(Lattice, ConjugateSubgroups) {
  const PermutationGroup a5 = alternating(5);
  const PermutationGroup p = sylow(a5, 5);
  const PermutationGroup q = conjugate(p, cyc(5, {{0, 1, 2}}));
  const auto t = are_conjugate_subgroups(a5, p, q);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(same_group(conjugate(p, *t), q));
  EXPECT_TRUE(are_conjugate_subgroups(a5, p, p).has_value());
  const PermutationGroup s4 = symmetric(4);
  EXPECT_FALSE(are_conjugate_subgroups(s4, gen(4, {{{0, 1}}}), gen(4, {{{0, 1}, {2, 3}}})).has_value());
}

TEST(Sections, QuotientBasics) {
  const PermutationGroup s4 = symmetric(4);
  const PermutationGroup v4 = core(s4, sylow(s4, 2));
  const Section q = quotient(s4, v4);
  EXPECT_EQ(q.quotient().order(), 6u);
  EXPECT_TRUE(isomorphic(q.quotient(), symmetric(3)));
  EXPECT_EQ(quotient(s4, s4).quotient().order(), 1u);
  EXPECT_EQ(quotient(s4, PermutationGroup::trivial(4)).quotient().order(), 24u);
  EXPECT_THROW(quotient(s4, sylow(s4, 3)), InvalidInput);
}

TEST(Sections, ProjectionKernelIsBottom) {
  for (const char* name : {"s4", "f42", "a4", "d8", "f20"}) {
    const PermutationGroup& g = entry(name);
    for (const auto& n : *normal_subgroups(g)) {
      const Section s = quotient(g, n);
      EXPECT_EQ(s.quotient().order(), g.order() / n.order()) << name;
      std::set<Permutation> images;
      for (const auto& x : elements(g)) {
        const Permutation px = s.project(x);
        images.insert(px);
        EXPECT_EQ(px.is_identity(), n.contains(x)) << name;
      }
      EXPECT_EQ(images.size(), s.order()) << name;
      for (const auto& a : g.generators()) {
        for (const auto& b : g.generators()) EXPECT_EQ(s.project(a * b), s.project(a) * s.project(b));
      }
    }
  }
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(isomorphic(cyclic(6), symmetric(3)));
  EXPECT_FALSE(isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))));
  EXPECT_TRUE(isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)));
  EXPECT_TRUE(isomorphic(generalized_quaternion(8), entry("q8")));
  EXPECT_FALSE(isomorphic(generalized_quaternion(8), dihedral(4)));
}

TEST(Isomorphism, Involvement) {
  EXPECT_TRUE(involves(sl2(5), sl2(5)));
  EXPECT_TRUE(involves(symmetric(4), cyclic(4)));
  EXPECT_FALSE(involves(alternating(5), cyclic(6)));
  EXPECT_TRUE(involves(symmetric(4), symmetric(3)));
}

}  // namespace
}  // namespace tig
