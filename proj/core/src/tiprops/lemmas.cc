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

#include "tigroup/tiprops/lemmas.h"

#include <numeric>
#include <string>
#include <vector>

#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/section.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"
#include "tigroup/tiprops/ti.h"

namespace tig {

namespace {

std::string order_text(const PermutationGroup& g) { return std::to_string(g.order()); }

// Shared hypotheses of the quotient lemmas; empty string when they hold.
std::string quotient_hypotheses(const PermutationGroup& g, const PermutationGroup& n, const PermutationGroup& h,
                                const Bounds& bounds) {
  if (!g.contains(n) || !is_normal(g, n)) return "n_normal";
  if (!g.contains(h)) return "h_subgroup";
  if (std::gcd(n.order(), h.order()) != 1) return "coprime";
  if (!is_ti(g, h, bounds).ti) return "ti";
  return {};
}

}  // namespace

TheoremReport check_hall_via_normalizer(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds) {
  const std::string id = "hall_via_normalizer";
  if (!is_ti(g, h, bounds).ti) return not_applicable(id, "ti");
  PermutationGroup n = normalizer(g, h, bounds);
  const bool in_g = is_hall_in(h, g);
  const bool in_n = is_hall_in(h, n);
  TheoremReport rep;
  rep.statement = id;
  rep.add_check("biconditional", in_g == in_n,
                std::string("Hall in G: ") + (in_g ? "yes" : "no") + ", Hall in N_G(H): " + (in_n ? "yes" : "no") +
                    ", |N_G(H)| = " + order_text(n));
  rep.certificate.add_group("G", g);
  rep.certificate.add_group("H", h);
  rep.certificate.add_group("N_G(H)", n);
  rep.certificate.add(FactKind::kOrder, {"G"}, g.order());
  rep.certificate.add(FactKind::kOrder, {"H"}, h.order());
  rep.certificate.add(FactKind::kOrder, {"N_G(H)"}, n.order());
  rep.certificate.add(FactKind::kNormalizes, {"N_G(H)", "H"});
  rep.settle();
  return rep;
}

TheoremReport check_hall_ti_conjugacy(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds) {
  const std::string id = "hall_ti_conjugacy";
  if (!g.contains(h)) throw InvalidInput(id + ": subgroup is not contained in the group");
  if (!is_hall_in(h, g)) return not_applicable(id, "hall");
  if (!is_ti(g, h, bounds).ti) return not_applicable(id, "ti");
  const PrimeSet pi = PrimeSet::of_order(h.order());

  TheoremReport rep;
  rep.statement = id;
  Certificate& cert = rep.certificate;
  cert.add_group("G", g);
  cert.add_group("H", h);
  const KeyedOrbit orbit = subgroup_conjugation_orbit(g, h, bounds);
  std::vector<PermutationGroup> conjugates;
  std::vector<Permutation> conjugators;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    conjugators.push_back(orbit.transversal(i));
    conjugates.push_back(conjugate(h, conjugators.back()));
  }

  const auto& classes = *subgroup_classes(g, bounds);
  std::size_t checked = 0;
  std::size_t missing = 0;
  std::size_t hall_classes = 0;
  bool hall_conjugate = true;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const PermutationGroup& k = classes[c].representative;
    if (!pi.is_pi_number(k.order())) continue;
    ++checked;
    const std::string name = "K" + std::to_string(c);
    // K <= H^s exactly when K^(s^-1) <= H.
    std::optional<Permutation> into;
    for (std::size_t i = 0; i < conjugates.size() && !into; ++i) {
      if (conjugates[i].contains(k)) into = conjugators[i].inverse();
    }
    if (!into) {
      ++missing;
      cert.add_group(name, k);
      continue;
    }
    cert.add_group(name, k);
    cert.add_element("t" + std::to_string(c), *into);
    cert.add(FactKind::kConjugateInto, {name, "H", "t" + std::to_string(c)});
    if (k.order() == h.order()) {
      ++hall_classes;
      auto t = are_conjugate_subgroups(g, h, k, bounds);
      if (!t) {
        hall_conjugate = false;
      } else {
        cert.add_element("u" + std::to_string(c), *t);
        cert.add(FactKind::kConjugate, {"H", name, "u" + std::to_string(c)});
      }
    }
  }
  rep.add_check("pi_subgroups_conjugate_into_h", missing == 0,
                std::to_string(checked) + " pi-subgroup classes, " + std::to_string(missing) + " not conjugate into H");
  rep.add_check("hall_single_class", hall_classes == 1 && hall_conjugate,
                std::to_string(hall_classes) + " classes of Hall pi-subgroups");
  rep.settle();
  return rep;
}

TheoremReport check_invariant_sylow(const PermutationGroup& g, const PermutationGroup& n, const PermutationGroup& h,
                                    std::uint64_t p, const Bounds& bounds) {
  const std::string id = "invariant_sylow";
  if (!is_prime(p)) throw InvalidInput(id + ": " + std::to_string(p) + " is not prime");
  if (std::string failed = quotient_hypotheses(g, n, h, bounds); !failed.empty()) return not_applicable(id, failed);
  if (n.order() * h.order() != g.order() || !intersection(n, h, bounds).is_trivial()) {
    return not_applicable(id, "complement");
  }
  if (n.order() % p != 0) return not_applicable(id, "p_divides_n");
  TheoremReport rep;
  rep.statement = id;
  auto s = invariant_sylow(n, h, p, bounds);
  rep.add_check("invariant_sylow_exists", s.has_value(),
                s ? "Sylow " + std::to_string(p) + "-subgroup of order " + order_text(*s) : "none found");
  if (s) {
    Certificate& cert = rep.certificate;
    cert.add_group("N", n);
    cert.add_group("H", h);
    cert.add_group("P", *s);
    cert.add(FactKind::kSubgroup, {"N", "P"});
    cert.add(FactKind::kOrder, {"P"}, p_part(n.order(), p));
    cert.add(FactKind::kNormalizes, {"H", "P"});
  }
  rep.settle();
  return rep;
}

TheoremReport check_quotient_normalizer(const PermutationGroup& g, const PermutationGroup& n,
                                        const PermutationGroup& h, const Bounds& bounds) {
  const std::string id = "quotient_normalizer";
  if (std::string failed = quotient_hypotheses(g, n, h, bounds); !failed.empty()) return not_applicable(id, failed);
  Section bar = quotient(g, n, bounds);
  PermutationGroup hb = bar.image(h);
  PermutationGroup lhs = normalizer(bar.quotient(), hb, bounds);
  PermutationGroup rhs = bar.image(normalizer(g, h, bounds));
  TheoremReport rep;
  rep.statement = id;
  rep.add_check("normalizer_image", same_group(lhs, rhs),
                "|N(Hbar)| = " + order_text(lhs) + ", |image of N_G(H)| = " + order_text(rhs));
  Certificate& cert = rep.certificate;
  cert.add_group("Gbar", bar.quotient());
  cert.add_group("Hbar", hb);
  cert.add_group("N(Hbar)", lhs);
  cert.add_group("image", rhs);
  cert.add(FactKind::kNormalizes, {"image", "Hbar"});
  cert.add(FactKind::kSubgroup, {"image", "N(Hbar)"});
  cert.add(FactKind::kOrder, {"image"}, rhs.order());
  cert.add(FactKind::kOrder, {"N(Hbar)"}, lhs.order());
  rep.settle();
  return rep;
}

TheoremReport check_ti_image(const PermutationGroup& g, const PermutationGroup& n, const PermutationGroup& h,
                             const Bounds& bounds) {
  const std::string id = "ti_image";
  if (std::string failed = quotient_hypotheses(g, n, h, bounds); !failed.empty()) return not_applicable(id, failed);
  Section bar = quotient(g, n, bounds);
  PermutationGroup hb = bar.image(h);
  TIWitness w = is_ti(bar.quotient(), hb, bounds);
  TheoremReport rep;
  rep.statement = id;
  rep.certificate.add_group("Gbar", bar.quotient());
  rep.certificate.add_group("Hbar", hb);
  std::string detail = "|Hbar| = " + order_text(hb);
  if (!w.ti && w.conjugator) {
    rep.certificate.add_element("t", *w.conjugator);
    detail += ", violated by " + to_cycle_string(*w.conjugator);
  }
  rep.add_check("image_ti", w.ti, detail);
  rep.settle();
  return rep;
}

}  // namespace tig
