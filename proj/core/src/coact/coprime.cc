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

#include "tigroup/coact/coprime.h"

#include <numeric>
#include <string>

#include "tigroup/coact/fusion.h"
#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/primes.h"
#include "tigroup/grouplat/section.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"

namespace tig {

namespace {

std::string order_text(const PermutationGroup& g) { return std::to_string(g.order()); }

}  // namespace

CoprimeActionPair make_pair(const PermutationGroup& parent, const PermutationGroup& g, const PermutationGroup& a) {
  auto fail = [](const char* what) { throw InvalidInput(std::string("coprime action pair: ") + what); };
  if (g.degree() != parent.degree() || a.degree() != parent.degree()) fail("degree mismatch");
  if (!parent.contains(g)) fail("G is not a subgroup of the parent");
  if (!parent.contains(a)) fail("A is not a subgroup of the parent");
  if (!is_normal(parent, g)) fail("G is not normal in the parent");
  if (std::gcd(g.order(), a.order()) != 1) fail("|G| and |A| are not coprime");
  if (g.order() * a.order() != parent.order()) fail("the parent is not G A");
  return {parent, g, a};
}

PermutationGroup fixed_subgroup(const CoprimeActionPair& pair, const Bounds& bounds) {
  return centralizer(pair.g_part, pair.a_part, bounds);
}

PermutationGroup commutator_ga(const CoprimeActionPair& pair) { return commutator(pair.g_part, pair.a_part); }

TheoremReport check_coprime_identities(const CoprimeActionPair& pair, const Bounds& bounds) {
  const std::string id = "coprime_action";
  const PermutationGroup& g = pair.g_part;
  const PermutationGroup& a = pair.a_part;
  const bool g_solvable = is_solvable(g);
  const bool a_solvable = is_solvable(a);
  if (!g_solvable && !a_solvable) return not_applicable(id, "solvable_side");

  TheoremReport rep;
  rep.statement = id;
  rep.detail = std::string("solvable: ") + (g_solvable ? "G" : "") + (g_solvable && a_solvable ? ", " : "") +
               (a_solvable ? "A" : "");
  Certificate& cert = rep.certificate;
  const PermutationGroup c = fixed_subgroup(pair, bounds);
  const PermutationGroup k = commutator_ga(pair);
  cert.add_group("G", g);
  cert.add_group("A", a);
  cert.add_group("C_G(A)", c);
  cert.add_group("[G,A]", k);

  // (a)
  const std::uint64_t product = product_set_size(k, c, bounds);
  rep.add_check("product", product == g.order(),
                "|[G,A]| = " + order_text(k) + ", |C_G(A)| = " + order_text(c) + ", |[G,A] C_G(A)| = " +
                    std::to_string(product));
  cert.add(FactKind::kProductOrder, {"[G,A]", "C_G(A)"}, product);
  cert.add(FactKind::kSubgroup, {"G", "[G,A]"});
  cert.add(FactKind::kSubgroup, {"G", "C_G(A)"});
  if (is_abelian(g)) {
    const bool meet = intersection(k, c, bounds).is_trivial();
    rep.add_check("abelian_direct", meet);
    cert.add(FactKind::kTrivialIntersection, {"[G,A]", "C_G(A)"});
  } else {
    rep.add_clause("abelian_direct", Verdict::kHolds, "G is not abelian", false);
  }

  // (b)
  const PermutationGroup kk = commutator(k, a);
  rep.add_check("commutator_idempotent", same_group(kk, k), "|[G,A,A]| = " + order_text(kk));

  // (c), (d)
  bool all_invariant = true;
  bool all_sylow = true;
  std::size_t invariant_count = 0;
  std::string missing;
  for (auto p : prime_divisors(g.order())) {
    auto s = invariant_sylow(g, a, p, bounds);
    if (!s) {
      all_invariant = false;
      missing += " " + std::to_string(p);
      continue;
    }
    const std::string name = "P" + std::to_string(p);
    cert.add_group(name, *s);
    cert.add(FactKind::kSubgroup, {"G", name});
    cert.add(FactKind::kOrder, {name}, p_part(g.order(), p));
    cert.add(FactKind::kNormalizes, {"A", name});
    const std::uint64_t target = p_part(c.order(), p);
    const KeyedOrbit orbit = subgroup_conjugation_orbit(g, *s, bounds);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      PermutationGroup pi = conjugate(*s, orbit.transversal(i));
      if (!normalizes(a, pi)) continue;
      ++invariant_count;
      if (intersection(pi, c, bounds).order() != target) all_sylow = false;
    }
  }
  rep.add_check("invariant_sylow", all_invariant, all_invariant ? "" : "no A-invariant Sylow for p =" + missing);
  rep.add_check("sylow_centralizer", all_sylow,
                std::to_string(invariant_count) + " A-invariant Sylow subgroups checked", invariant_count > 0);

  // (e)
  bool quotient_ok = true;
  std::size_t proper = 0;
  for (const auto& n : *normal_subgroups(g, bounds)) {
    if (!normalizes(a, n)) continue;
    if (!n.is_trivial() && n.order() != g.order()) ++proper;
    Section bar = quotient(pair.parent, n, bounds);
    PermutationGroup lhs = bar.image(c);
    PermutationGroup rhs = centralizer(bar.image(g), bar.image(a), bounds);
    if (!same_group(lhs, rhs)) quotient_ok = false;
  }
  rep.add_check("quotient_centralizer", quotient_ok,
                std::to_string(proper) + " proper nontrivial A-invariant normal subgroups", proper > 0);

  // (f)
  FusionResult fusion = controls_fusion(c, c, g, bounds);
  rep.add_check("centralizer_fusion", fusion.controls,
                fusion.controls ? "" : to_cycle_string(*fusion.x) + " ~ " + to_cycle_string(*fusion.y) + " in G only",
                fusion.fused);
  if (!fusion.controls) {
    cert.add_element("x", *fusion.x);
    cert.add_element("y", *fusion.y);
    cert.add_element("t", *fusion.t);
    cert.add(FactKind::kContains, {"C_G(A)", "x"});
    cert.add(FactKind::kContains, {"C_G(A)", "y"});
    cert.add(FactKind::kContains, {"G", "t"});
    cert.add(FactKind::kElementConjugate, {"x", "y", "t"});
  }
  rep.settle();
  return rep;
}

TheoremReport check_cyclic_sylow_action(const CoprimeActionPair& pair, const Bounds& bounds) {
  const std::string id = "cyclic_sylow_action";
  const PermutationGroup& g = pair.g_part;
  for (auto p : prime_divisors(g.order())) {
    if (!is_cyclic(sylow(g, p, bounds), bounds)) return not_applicable(id, "cyclic_sylow");
  }
  TheoremReport rep;
  rep.statement = id;
  const PermutationGroup c = fixed_subgroup(pair, bounds);
  const PermutationGroup k = commutator_ga(pair);
  rep.add_check("hall", is_hall_in(c, g), "|C_G(A)| = " + order_text(c));
  const bool meet = intersection(k, c, bounds).is_trivial();
  const bool normal = is_normal(g, k);
  rep.add_check("semidirect", meet && normal && k.order() * c.order() == g.order(), "|[G,A]| = " + order_text(k));
  rep.add_check("cyclic", is_cyclic(k, bounds));
  Certificate& cert = rep.certificate;
  cert.add_group("G", g);
  cert.add_group("C_G(A)", c);
  cert.add_group("[G,A]", k);
  cert.add(FactKind::kOrder, {"G"}, g.order());
  cert.add(FactKind::kOrder, {"C_G(A)"}, c.order());
  cert.add(FactKind::kNormalizes, {"G", "[G,A]"});
  cert.add(FactKind::kTrivialIntersection, {"[G,A]", "C_G(A)"});
  cert.add(FactKind::kProductOrder, {"[G,A]", "C_G(A)"}, g.order());
  rep.settle();
  return rep;
}

}  // namespace tig
