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

#include "oracle.h"
#include "tigroup/corpus/catalog.h"
#include "tigroup/corpus/constructors.h"
#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/section.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"
#include "tigroup/tiprops/analysis.h"
#include "tigroup/tiprops/complement.h"
#include "tigroup/tiprops/frobenius.h"
#include "tigroup/tiprops/lemmas.h"
#include "tigroup/tiprops/pi_series.h"
#include "tigroup/tiprops/ti.h"

namespace tig {
namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

const CatalogEntry& entry(const char* name) {
  const CatalogEntry* e = find_entry(name);
  if (!e) throw std::runtime_error(std::string("missing entry ") + name);
  return *e;
}

const Clause* clause(const TheoremReport& r, const std::string& name) {
  for (const auto& c : r.clauses) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(TI, Examples) {
  const PermutationGroup a5 = alternating(5);
  EXPECT_TRUE(is_ti(a5, sylow(a5, 5)).ti);
  const PermutationGroup s4 = symmetric(4);
  EXPECT_TRUE(is_ti(s4, core(s4, sylow(s4, 2))).ti);
  const TIWitness w = is_ti(s4, sylow(s4, 2));
  EXPECT_FALSE(w.ti);
  ASSERT_TRUE(w.conjugator && w.intersection);
  EXPECT_EQ(w.intersection->order(), 4u);
  const PermutationGroup p = sylow(s4, 2);
  EXPECT_EQ(intersection(p, conjugate(p, *w.conjugator)).order(), 4u);
  // The cyclic subgroups of order 4 in S4 have distinct squares, so they
  // meet trivially.
  EXPECT_TRUE(is_ti(s4, PermutationGroup(4, {cyc(4, {{0, 1, 2, 3}})})).ti);
}

TEST(TI, MatchesDefinitionOnCatalog) {
  std::size_t checked = 0, ti_count = 0;
  for (const auto& e : catalog()) {
    if (e.has_tag("stretch") || *e.expected("order") > 200) continue;
    const PermutationGroup& g = e.group();
    const oracle::ElemSet gs = oracle::elements(g);
    for (const auto& c : *subgroup_classes(g)) {
      const bool want = oracle::is_ti(gs, oracle::elements(c.representative));
      const TIWitness got = is_ti(g, c.representative);
      EXPECT_EQ(got.ti, want) << e.name() << " order " << c.order;
      if (!got.ti) {
        const PermutationGroup m = intersection(c.representative, conjugate(c.representative, *got.conjugator));
        EXPECT_TRUE(m.order() != 1 && m.order() != c.order);
      }
      ++checked;
      ti_count += want ? 1 : 0;
    }
  }
  EXPECT_GT(checked, 500u);
  EXPECT_GT(ti_count, 100u);
}

TEST(PiSeries, Examples) {
  const PermutationGroup a5 = alternating(5);
  EXPECT_TRUE(pi_core(a5, PrimeSet{2, 3}).is_trivial());
  const PermutationGroup& f42 = entry("f42").group();
  const PermutationGroup o = pi_core(f42, PrimeSet{2, 7});
  EXPECT_EQ(o.order(), 14u);
  EXPECT_FALSE(is_abelian(o));  // dihedral, not cyclic
  EXPECT_TRUE(same_group(pi_core(f42, PrimeSet{2, 3, 7}), f42));

  const PiSeries s = pi_series(f42, PrimeSet{3});
  EXPECT_TRUE(s.separable);
  ASSERT_TRUE(s.pi_length.has_value());
  EXPECT_EQ(*s.pi_length, 1u);
  ASSERT_EQ(s.terms.size(), 3u);
  EXPECT_EQ(s.terms[1].order(), 14u);

  const PiSeries bad = pi_series(a5, PrimeSet{5});
  EXPECT_FALSE(bad.separable);
  EXPECT_FALSE(bad.pi_length.has_value());

  const PiSeries pgroup = pi_series(cyclic(9), PrimeSet{3});
  EXPECT_EQ(pgroup.pi_length, std::optional<std::uint64_t>(1));
}

TEST(PiSeries, PiCoreIsLargestNormalPiSubgroup) {
  for (const auto& e : catalog()) {
    if (e.has_tag("stretch") || *e.expected("order") > 500) continue;
    const PermutationGroup& g = e.group();
    for (auto p : prime_divisors(g.order())) {
      const PrimeSet pi{p};
      std::uint64_t best = 1;
      for (const auto& n : *normal_subgroups(g)) {
        if (pi.is_pi_number(n.order())) best = std::max(best, n.order());
      }
      EXPECT_EQ(pi_core(g, pi).order(), best) << e.name() << " p=" << p;
    }
  }
}

TEST(Frobenius, KernelExamples) {
  const PermutationGroup f20(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})});
  const KernelResult k = frobenius_kernel(f20, PermutationGroup(5, {cyc(5, {{1, 2, 4, 3}})}));
  EXPECT_EQ(k.report.verdict, Verdict::kHolds);
  ASSERT_TRUE(k.kernel);
  EXPECT_EQ(k.kernel->order(), 5u);

  const PermutationGroup s3 = symmetric(3);
  EXPECT_EQ(frobenius_kernel(s3, PermutationGroup(3, {cyc(3, {{0, 1}})})).kernel->order(), 3u);

  const PermutationGroup& f42 = entry("f42").group();
  const auto h6 = hall(f42, PrimeSet{2, 3});
  EXPECT_EQ(frobenius_kernel(f42, *h6).kernel->order(), 7u);

  const PermutationGroup a5 = alternating(5);
  EXPECT_EQ(frobenius_kernel(a5, sylow(a5, 5)).report.verdict, Verdict::kNotApplicable);
}

TEST(Frobenius, KernelMatchesSetDifferenceOnTaggedEntries) {
  std::size_t n = 0;
  for (const auto& e : catalog()) {
    if (!e.has_tag("frobenius")) continue;
    const PermutationGroup& g = e.group();
    const PermutationGroup h = e.subgroup("H");
    const KernelResult k = frobenius_kernel(g, h);
    ASSERT_EQ(k.report.verdict, Verdict::kHolds) << e.name();
    const oracle::ElemSet want = oracle::frobenius_kernel(oracle::elements(g), oracle::elements(h));
    EXPECT_TRUE(oracle::is_subgroup(want)) << e.name();
    EXPECT_EQ(oracle::elements(*k.kernel), want) << e.name();
    EXPECT_EQ(k.kernel->order() * h.order(), g.order()) << e.name();
    EXPECT_TRUE(recheck(k.report.certificate).ok) << e.name();
    if (auto kernel_order = e.expected("kernel.order")) {
      EXPECT_EQ(k.kernel->order(), *kernel_order) << e.name();
    }
    ++n;
  }
  EXPECT_GE(n, 6u);
}

TEST(Frobenius, AffineLineIsFrobenius) {
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    const PermutationGroup g = agl1(q);
    EXPECT_EQ(g.order(), std::uint64_t{q} * (q - 1));
    const PermutationGroup h(q, {g.generators().back()});
    ASSERT_EQ(h.order(), q - 1);
    const KernelResult k = frobenius_kernel(g, h);
    ASSERT_TRUE(k.kernel) << q;
    EXPECT_EQ(k.kernel->order(), q);
    EXPECT_EQ(oracle::elements(*k.kernel), oracle::frobenius_kernel(oracle::elements(g), oracle::elements(h)));
  }
}

TEST(Frobenius, Action) {
  const CatalogEntry& f21 = entry("f21");
  const PermutationGroup& g = f21.group();
  const PermutationGroup c7 = sylow(g, 7);
  EXPECT_TRUE(is_frobenius_action(f21.subgroup("H"), quotient(c7, PermutationGroup::trivial(7))));
  EXPECT_TRUE(is_frobenius_action(f21.subgroup("H"), quotient(c7, c7)));

  const CatalogEntry& sl = entry("sl2_32_c5");
  const PermutationGroup n = sl.subgroup("N");
  const PermutationGroup alpha = sl.subgroup("H");
  const Section whole = quotient(n, PermutationGroup::trivial(n.degree()));
  EXPECT_FALSE(is_frobenius_action(alpha, whole));
  EXPECT_EQ(fixed_coset_count(alpha.generators()[0], whole), 6u);
}

TEST(Frobenius, BuildWitness) {
  const PermutationGroup c7 = cyclic(7);
  const PermutationGroup h3(7, {cyc(7, {{1, 2, 4}, {3, 6, 5}})});
  const FrobeniusWitness w = build_frobenius_witness(h3, quotient(c7, PermutationGroup::trivial(7)));
  EXPECT_EQ(w.group.order(), 21u);
  EXPECT_EQ(frobenius_kernel(w.group, w.complement).kernel->order(), 7u);

  const PermutationGroup c5 = cyclic(5);
  const PermutationGroup h4(5, {cyc(5, {{1, 2, 4, 3}})});
  const FrobeniusWitness f20 = build_frobenius_witness(h4, quotient(c5, PermutationGroup::trivial(5)));
  EXPECT_EQ(f20.group.order(), 20u);
  EXPECT_EQ(f20.kernel.order(), 5u);
  EXPECT_THROW(build_frobenius_witness(PermutationGroup::trivial(5), quotient(c5, PermutationGroup::trivial(5))),
               InvalidInput);
}

TEST(Analysis, F42SylowThree) {
  const CatalogEntry& e = entry("f42");
  const TIHallAnalysis a = analyze_ti_hall(e.group(), e.subgroup("P3"));
  EXPECT_EQ(a.report.verdict, Verdict::kHolds);
  EXPECT_EQ(a.context.pi_length, std::optional<std::uint64_t>(1));
  EXPECT_EQ(a.context.o_pi_prime.order(), 14u);
  ASSERT_TRUE(a.chief_frobenius_factor.has_value());
  EXPECT_EQ(a.chief_frobenius_factor->order(), 7u);
  EXPECT_TRUE(recheck(a.report.certificate).ok);

  const TIHallDecomposition d = decompose_ti_hall(e.group(), e.subgroup("P3"));
  EXPECT_EQ(d.report.verdict, Verdict::kHolds);
  EXPECT_EQ(d.o.order(), 14u);
  EXPECT_EQ(d.q.order(), 2u);
}

TEST(Analysis, A5IsNotApplicableAndFactorizationFails) {
  const PermutationGroup a5 = alternating(5);
  const TIHallAnalysis a = analyze_ti_hall(a5, sylow(a5, 5));
  EXPECT_EQ(a.report.verdict, Verdict::kNotApplicable);
  EXPECT_EQ(a.context.failed, "pi_separable");
  ASSERT_TRUE(a.factorization.has_value());
  EXPECT_FALSE(*a.factorization);
}

TEST(Analysis, NormalSubgroupIsNotApplicable) {
  const PermutationGroup& f21 = entry("f21").group();
  EXPECT_EQ(analyze_ti_hall(f21, sylow(f21, 7)).report.verdict, Verdict::kNotApplicable);
}

TEST(Complement, NormalComplement) {
  const CatalogEntry& f20 = entry("f20");
  const auto k = normal_complement(f20.group(), f20.subgroup("H"));
  ASSERT_TRUE(k);
  EXPECT_EQ(k->order(), 5u);
  const PermutationGroup s4 = symmetric(4);
  EXPECT_FALSE(normal_complement(s4, sylow(s4, 3)).has_value());
  EXPECT_TRUE(same_group(*normal_complement(s4, PermutationGroup::trivial(4)), s4));
}

TEST(Complement, TransferBiconditional) {
  const CatalogEntry& f20 = entry("f20");
  EXPECT_EQ(check_normal_complement_transfer(f20.group(), f20.subgroup("H")).verdict, Verdict::kHolds);
  const PermutationGroup s4 = symmetric(4);
  const TheoremReport r = check_normal_complement_transfer(s4, sylow(s4, 3));
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_FALSE(normal_complement(normalizer(s4, sylow(s4, 3)), sylow(s4, 3)).has_value());
}

TEST(Complement, CentralizerComplement) {
  const CatalogEntry& f42 = entry("f42");
  const TheoremReport r = check_centralizer_complement(f42.group(), f42.subgroup("P3"));
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_TRUE(recheck(r.certificate).ok);
}

TEST(Complement, DoubleFrobenius) {
  const CatalogEntry& s4 = entry("s4");
  const TheoremReport r = check_double_frobenius(s4.group(), s4.subgroup("H"));
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  ASSERT_NE(clause(r, "double_frobenius"), nullptr);
  EXPECT_TRUE(clause(r, "double_frobenius")->instantiated);

  // Even order H and [O,H] < O are filtered.
  const CatalogEntry& f20 = entry("f20");
  EXPECT_EQ(check_double_frobenius(f20.group(), f20.subgroup("H")).verdict, Verdict::kNotApplicable);
  const CatalogEntry& f42 = entry("f42");
  const TheoremReport na = check_double_frobenius(f42.group(), f42.subgroup("P3"));
  EXPECT_EQ(na.verdict, Verdict::kNotApplicable);
  EXPECT_NE(na.detail.find("commutator_full"), std::string::npos);
}

TEST(Lemmas, HallViaNormalizer) {
  const PermutationGroup a5 = alternating(5);
  EXPECT_EQ(check_hall_via_normalizer(a5, sylow(a5, 5)).verdict, Verdict::kHolds);
  EXPECT_EQ(check_hall_via_normalizer(a5, a5).verdict, Verdict::kHolds);
  const PermutationGroup s4 = symmetric(4);
  EXPECT_EQ(check_hall_via_normalizer(s4, sylow(s4, 2)).verdict, Verdict::kNotApplicable);
}

TEST(Lemmas, HallTIConjugacy) {
  const PermutationGroup a5 = alternating(5);
  const TheoremReport r = check_hall_ti_conjugacy(a5, sylow(a5, 5));
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_TRUE(recheck(r.certificate).ok);
  const CatalogEntry& f42 = entry("f42");
  EXPECT_EQ(check_hall_ti_conjugacy(f42.group(), f42.subgroup("P3")).verdict, Verdict::kHolds);
}

TEST(Lemmas, NormalSubgroupLemmas) {
  const CatalogEntry& f42 = entry("f42");
  const PermutationGroup& g = f42.group();
  const PermutationGroup h = f42.subgroup("P3");
  const PermutationGroup o = pi_core(g, PrimeSet{2, 7});
  EXPECT_EQ(check_invariant_sylow(g, o, h, 7).verdict, Verdict::kHolds);
  const PermutationGroup c7 = sylow(g, 7);
  EXPECT_EQ(check_quotient_normalizer(g, c7, h).verdict, Verdict::kHolds);
  EXPECT_EQ(check_ti_image(g, c7, h).verdict, Verdict::kHolds);
  EXPECT_EQ(normalizer(quotient(g, c7).quotient(), quotient(g, c7).image(h)).order(), 6u);
}

TEST(Certificates, TamperedFactIsRejected) {
  const CatalogEntry& f20 = entry("f20");
  KernelResult k = frobenius_kernel(f20.group(), f20.subgroup("H"));
  ASSERT_FALSE(k.report.certificate.empty());
  Certificate bad = k.report.certificate;
  bad.add(FactKind::kOrder, {bad.groups().begin()->first}, 9999);
  EXPECT_FALSE(recheck(bad).ok);
  Certificate wrong_conj;
  wrong_conj.add_group("A", PermutationGroup(5, {cyc(5, {{0, 1}})}));
  wrong_conj.add_group("B", PermutationGroup(5, {cyc(5, {{2, 3}})}));
  wrong_conj.add_element("t", Permutation::identity(5));
  wrong_conj.add(FactKind::kConjugate, {"A", "B", "t"});
  EXPECT_FALSE(recheck(wrong_conj).ok);
  wrong_conj.add_element("u", cyc(5, {{0, 2}, {1, 3}}));
  Certificate good;
  good.add_group("A", PermutationGroup(5, {cyc(5, {{0, 1}})}));
  good.add_group("B", PermutationGroup(5, {cyc(5, {{2, 3}})}));
  good.add_element("u", cyc(5, {{0, 2}, {1, 3}}));
  good.add(FactKind::kConjugate, {"A", "B", "u"});
  EXPECT_TRUE(recheck(good).ok);
}

TEST(Report, VerdictNames) {
  for (auto v : {Verdict::kHolds, Verdict::kFails, Verdict::kNotApplicable, Verdict::kSkipped}) {
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  }
  TheoremReport r;
  r.add_check("a", true);
  r.add_clause("b", Verdict::kSkipped);
  r.settle();
  EXPECT_EQ(r.verdict, Verdict::kSkipped);
  r.add_check("c", false);
  r.settle();
  EXPECT_EQ(r.verdict, Verdict::kFails);
}

}  // namespace
}  // namespace tig
