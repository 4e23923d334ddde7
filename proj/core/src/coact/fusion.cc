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

#include "tigroup/coact/fusion.h"

#include <string>
#include <unordered_map>

#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/primes.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"
#include "tigroup/tiprops/complement.h"

namespace tig {

namespace {

std::string order_text(const PermutationGroup& g) { return std::to_string(g.order()); }

// Some subgroup class of pi-order with no member inside H, or nullopt.
std::optional<PermutationGroup> pi_subgroup_outside(const PermutationGroup& g, const PermutationGroup& h,
                                                    const Bounds& bounds) {
  const PrimeSet pi = PrimeSet::of_order(h.order());
  const KeyedOrbit orbit = subgroup_conjugation_orbit(g, h, bounds);
  std::vector<PermutationGroup> conjugates;
  for (std::size_t i = 0; i < orbit.size(); ++i) conjugates.push_back(conjugate(h, orbit.transversal(i)));
  for (const auto& cls : *subgroup_classes(g, bounds)) {
    if (!pi.is_pi_number(cls.order)) continue;
    bool inside = false;
    for (const auto& c : conjugates) {
      if (c.contains(cls.representative)) {
        inside = true;
        break;
      }
    }
    if (!inside) return cls.representative;
  }
  return std::nullopt;
}

}  // namespace

FusionResult controls_fusion(const PermutationGroup& k, const PermutationGroup& h, const PermutationGroup& g,
                             const Bounds& bounds) {
  if (!g.contains(k) || !k.contains(h)) throw InvalidInput("controls_fusion requires H <= K <= G");
  FusionResult out;
  auto g_classes = conjugacy_classes(g, bounds);
  auto k_classes = conjugacy_classes(k, bounds);
  // First element of H seen in each G-class, with its K-class.
  std::unordered_map<std::uint32_t, std::pair<Permutation, std::uint32_t>> seen;
  for_each_element(
      h,
      [&](const Permutation& y) {
        const auto gid = g_classes->class_of_rank[static_cast<std::size_t>(*g.chain().rank(y))];
        const auto kid = k_classes->class_of_rank[static_cast<std::size_t>(*k.chain().rank(y))];
        auto [it, fresh] = seen.try_emplace(gid, y, kid);
        if (fresh) return true;
        out.fused = true;
        if (it->second.second == kid) return true;
        out.controls = false;
        out.x = it->second.first;
        out.y = y;
        out.t = are_conjugate_elements(g, *out.x, y, bounds);
        return false;
      },
      bounds);
  return out;
}

std::optional<PermutationGroup> normal_p_complement(const PermutationGroup& g, std::uint64_t p,
                                                    const Bounds& bounds) {
  return normal_complement(g, sylow(g, p, bounds), bounds);
}

TheoremReport check_normal_p_complement(const PermutationGroup& g, std::uint64_t p, const Bounds& bounds) {
  const std::string id = "normal_p_complement";
  if (!is_prime(p)) throw InvalidInput(id + ": " + std::to_string(p) + " is not prime");
  if (g.order() % p != 0) return not_applicable(id, "p_divides_order");
  TheoremReport rep;
  rep.statement = id;
  Certificate& cert = rep.certificate;
  const PermutationGroup s = sylow(g, p, bounds);
  const auto complement = normal_p_complement(g, p, bounds);
  const std::string found = complement ? "complement of order " + order_text(*complement) : "no complement";
  cert.add_group("G", g);
  cert.add_group("P", s);
  cert.add(FactKind::kOrder, {"P"}, p_part(g.order(), p));
  if (complement) {
    cert.add_group("K", *complement);
    cert.add(FactKind::kSubgroup, {"G", "K"});
    cert.add(FactKind::kNormalizes, {"G", "K"});
    cert.add(FactKind::kOrder, {"K"}, g.order() / s.order());
  }

  const bool central = center(normalizer(g, s, bounds), bounds).contains(s);
  if (central) {
    rep.add_check("central_sylow", complement.has_value(), found);
  } else {
    rep.add_clause("central_sylow", Verdict::kHolds, "P is not central in N_G(P)", false);
  }
  const bool cyclic_least = is_cyclic(s, bounds) && prime_divisors(g.order()).front() == p;
  if (cyclic_least) {
    rep.add_check("cyclic_least_prime", complement.has_value(), found);
  } else {
    rep.add_clause("cyclic_least_prime", Verdict::kHolds, "P is not cyclic or p is not the least prime", false);
  }
  FusionResult fusion = controls_fusion(s, s, g, bounds);
  rep.add_check("fusion_criterion", fusion.controls == complement.has_value(),
                found + (fusion.controls ? ", P controls fusion" : ", P does not control fusion"));
  if (!fusion.controls) {
    cert.add_element("x", *fusion.x);
    cert.add_element("y", *fusion.y);
    cert.add_element("t", *fusion.t);
    cert.add(FactKind::kContains, {"P", "x"});
    cert.add(FactKind::kContains, {"P", "y"});
    cert.add(FactKind::kElementConjugate, {"x", "y", "t"});
  }
  rep.settle();
  return rep;
}

TheoremReport check_fusion_complement(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds) {
  const std::string id = "fusion_complement";
  if (!g.contains(h)) throw InvalidInput(id + ": subgroup is not contained in the group");
  if (!is_hall_in(h, g)) return not_applicable(id, "hall");
  if (!controls_fusion(h, h, g, bounds).controls) return not_applicable(id, "fusion_control");
  if (pi_subgroup_outside(g, h, bounds)) return not_applicable(id, "pi_subgroups_conjugate_into_h");
  TheoremReport rep;
  rep.statement = id;
  auto complement = normal_complement(g, h, bounds);
  rep.add_check("normal_complement", complement.has_value(),
                complement ? "complement of order " + order_text(*complement) : "no normal complement");
  if (complement) {
    Certificate& cert = rep.certificate;
    cert.add_group("G", g);
    cert.add_group("H", h);
    cert.add_group("K", *complement);
    cert.add(FactKind::kSubgroup, {"G", "K"});
    cert.add(FactKind::kNormalizes, {"G", "K"});
    cert.add(FactKind::kTrivialIntersection, {"H", "K"});
    cert.add(FactKind::kProductOrder, {"K", "H"}, g.order());
  }
  rep.settle();
  return rep;
}

}  // namespace tig
