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

#include "tigroup/tiprops/complement.h"

#include <string>
#include <vector>

#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/tiprops/analysis.h"
#include "tigroup/tiprops/frobenius.h"
#include "tigroup/tiprops/ti.h"

namespace tig {

namespace {

std::string order_text(const PermutationGroup& g) { return std::to_string(g.order()); }

// Records K as a normal complement of H in G.
void add_complement_facts(Certificate& cert, const std::string& g, const std::string& h, const std::string& k,
                          std::uint64_t g_order) {
  cert.add(FactKind::kSubgroup, {g, k});
  cert.add(FactKind::kNormalizes, {g, k});
  cert.add(FactKind::kTrivialIntersection, {h, k});
  cert.add(FactKind::kProductOrder, {k, h}, g_order);
}

}  // namespace

std::optional<PermutationGroup> normal_complement(const PermutationGroup& g, const PermutationGroup& h,
                                                  const Bounds& bounds) {
  if (h.is_trivial()) return g;
  if (g.order() % h.order() != 0) return std::nullopt;
  const std::uint64_t target = g.order() / h.order();
  for (const auto& n : *normal_subgroups(g, bounds)) {
    if (n.order() != target) continue;
    if (intersection(n, h, bounds).is_trivial()) return n;
  }
  return std::nullopt;
}

TheoremReport check_normal_complement_transfer(const PermutationGroup& g, const PermutationGroup& h,
                                               const Bounds& bounds) {
  const std::string id = "normal_complement_transfer";
  if (!is_ti(g, h, bounds).ti) return not_applicable(id, "ti");
  PermutationGroup n = normalizer(g, h, bounds);
  if (!is_hall_in(h, n)) return not_applicable(id, "hall_in_normalizer");

  TheoremReport rep;
  rep.statement = id;
  Certificate& cert = rep.certificate;
  cert.add_group("G", g);
  cert.add_group("H", h);
  cert.add_group("N_G(H)", n);
  auto in_n = normal_complement(n, h, bounds);
  auto in_g = normal_complement(g, h, bounds);
  rep.add_check("biconditional", in_n.has_value() == in_g.has_value(),
                std::string("complement in N_G(H) ") + (in_n ? "exists" : "absent") + ", in G " +
                    (in_g ? "exists" : "absent"));
  if (in_n) {
    cert.add_group("K_N", *in_n);
    add_complement_facts(cert, "N_G(H)", "H", "K_N", n.order());
  }
  if (in_g) {
    cert.add_group("K_G", *in_g);
    add_complement_facts(cert, "G", "H", "K_G", g.order());
  }

  const bool nonnormal = n.order() != g.order();
  if (nonnormal && in_g && !h.is_trivial()) {
    auto v = find_frobenius_section(*in_g, h, bounds);
    bool built = false;
    std::string detail = "no section of the complement with Frobenius action";
    if (v) {
      FrobeniusWitness w = build_frobenius_witness(h, *v, bounds);
      built = w.group.order() == v->order() * h.order();
      detail = "witness group of order " + order_text(w.group) + " with kernel of order " + order_text(w.kernel);
      cert.add_group("W", w.group);
      cert.add_group("W.complement", w.complement);
      cert.add_group("W.kernel", w.kernel);
      add_complement_facts(cert, "W", "W.complement", "W.kernel", w.group.order());
      cert.add(FactKind::kOrder, {"W.complement"}, h.order());
    }
    rep.add_check("frobenius_complement", built, detail);
  } else {
    rep.add_clause("frobenius_complement", Verdict::kHolds,
                   nonnormal ? "H has no normal complement" : "H is normal", false);
  }
  rep.settle();
  return rep;
}

TheoremReport check_centralizer_complement(const PermutationGroup& g, const PermutationGroup& h,
                                           const Bounds& bounds) {
  const std::string id = "centralizer_complement";
  TIHallContext ctx = ti_hall_context(g, h, bounds);
  if (!ctx.applicable()) return not_applicable(id, ctx.failed);
  if (!is_abelian(sylow(h, 2, bounds))) return not_applicable(id, "sylow2_abelian");

  TheoremReport rep;
  rep.statement = id;
  auto q = hall(ctx.normalizer, ctx.pi.complement_in(ctx.normalizer.order()), bounds);
  rep.add_check("complement_exists", q.has_value(), "Hall pi'-subgroup of N_G(H)");
  if (!q) {
    rep.settle();
    return rep;
  }
  const PermutationGroup& o = ctx.o_pi_prime;
  PermutationGroup c = centralizer(h, *q, bounds);
  rep.add_check("hall", is_hall_in(c, g), "|C_H(Q)| = " + order_text(c));
  PermutationGroup hq = commutator(h, *q);
  PermutationGroup n = join(join(o, hq), *q);
  const bool order_ok = n.order() * c.order() == g.order();
  const bool normal = is_normal(g, n);
  const bool meet = intersection(n, c, bounds).is_trivial();
  const std::uint64_t product = product_set_size(n, c, bounds);
  rep.add_check("complement_order", order_ok, "|O[H,Q]Q| = " + order_text(n));
  rep.add_check("normal", normal);
  rep.add_check("trivial_intersection", meet);
  rep.add_check("full_product", product == g.order(), "|N C_H(Q)| = " + std::to_string(product));

  Certificate& cert = rep.certificate;
  cert.add_group("G", g);
  cert.add_group("H", h);
  cert.add_group("O", o);
  cert.add_group("Q", *q);
  cert.add_group("C_H(Q)", c);
  cert.add_group("N", n);
  cert.add(FactKind::kSubgroup, {"H", "C_H(Q)"});
  cert.add(FactKind::kOrder, {"C_H(Q)"}, c.order());
  cert.add(FactKind::kOrder, {"G"}, g.order());
  add_complement_facts(cert, "G", "C_H(Q)", "N", g.order());
  rep.settle();
  return rep;
}

TheoremReport check_double_frobenius(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds) {
  const std::string id = "double_frobenius";
  TIHallContext ctx = ti_hall_context(g, h, bounds);
  if (!ctx.applicable()) return not_applicable(id, ctx.failed);
  if (h.order() % 2 == 0) return not_applicable(id, "h_odd");
  const PermutationGroup& o = ctx.o_pi_prime;
  if (!same_group(commutator(o, h), o)) return not_applicable(id, "commutator_full");
  if (!is_solvable(o)) return not_applicable(id, "o_solvable");
  auto q = hall(ctx.normalizer, ctx.pi.complement_in(ctx.normalizer.order()), bounds);
  if (!q) return not_applicable(id, "complement_exists");
  PermutationGroup od = derived_subgroup(o);
  if (od.contains(*q)) return not_applicable(id, "q_not_in_o_derived");

  TheoremReport rep;
  rep.statement = id;
  Section bar = quotient(g, od, bounds);
  const PermutationGroup& gb = bar.quotient();
  PermutationGroup ob = bar.image(o);
  PermutationGroup hb = bar.image(h);
  PermutationGroup qb = bar.image(*q);
  PermutationGroup ohb = join(ob, hb);
  Certificate& cert = rep.certificate;
  cert.add_group("Gbar", gb);
  cert.add_group("Obar", ob);
  cert.add_group("Hbar", hb);
  cert.add_group("Qbar", qb);
  cert.add_group("OHbar", ohb);

  // (a) Gbar = (Obar x| Hbar) x| Qbar.
  const bool oh_meet = intersection(ob, hb, bounds).is_trivial();
  const bool ohq_meet = intersection(ohb, qb, bounds).is_trivial();
  const bool o_normal = is_normal(gb, ob);
  const bool oh_normal = is_normal(gb, ohb);
  const bool orders = ob.order() * hb.order() * qb.order() == gb.order();
  rep.add_check("semidirect_structure", oh_meet && ohq_meet && o_normal && oh_normal && orders,
                "|Gbar| = " + order_text(gb) + ", |Obar| = " + order_text(ob) + ", |Hbar| = " + order_text(hb) +
                    ", |Qbar| = " + order_text(qb));
  cert.add(FactKind::kNormalizes, {"Gbar", "Obar"});
  cert.add(FactKind::kNormalizes, {"Gbar", "OHbar"});
  cert.add(FactKind::kTrivialIntersection, {"Obar", "Hbar"});
  cert.add(FactKind::kTrivialIntersection, {"OHbar", "Qbar"});
  cert.add(FactKind::kOrder, {"OHbar"}, ob.order() * hb.order());
  cert.add(FactKind::kOrder, {"Gbar"}, ohb.order() * qb.order());

  // (b) Qbar abelian and faithful on Hbar.
  const bool abelian = is_abelian(qb);
  const PermutationGroup kernel = centralizer(qb, hb, bounds);
  rep.add_check("q_abelian_faithful", abelian && kernel.is_trivial(),
                std::string(abelian ? "abelian" : "not abelian") + ", kernel of order " + order_text(kernel));
  cert.add(FactKind::kOrder, {"Qbar"}, qb.order());

  // (c) Double Frobenius for each prime-order b in Qbar: Obar [Hbar, b] has
  // kernel Obar and [Hbar, b] <b> has kernel [Hbar, b].
  const auto betas = prime_order_representatives(qb, bounds);
  bool all = !betas.empty();
  std::string detail = betas.empty() ? "Qbar has no element of prime order" : "";
  for (std::size_t i = 0; i < betas.size(); ++i) {
    PermutationGroup beta(gb.degree(), {betas[i]});
    PermutationGroup b = commutator(hb, beta);
    PermutationGroup upper = join(ob, b);
    PermutationGroup lower = join(b, beta);
    KernelResult k1 = frobenius_kernel(upper, b, bounds);
    KernelResult k2 = frobenius_kernel(lower, beta, bounds);
    const bool ok1 = k1.kernel && same_group(*k1.kernel, ob);
    const bool ok2 = k2.kernel && same_group(*k2.kernel, b);
    if (!ok1 || !ok2) all = false;
    const std::string tag = "beta" + std::to_string(i);
    if (!detail.empty()) detail += "; ";
    detail += tag + " of order " + std::to_string(betas[i].order()) + ": |[Hbar,b]| = " + order_text(b) +
              ", upper kernel " + to_string(k1.report.verdict).data() + ", lower kernel " +
              to_string(k2.report.verdict).data();
    cert.add_element(tag, betas[i]);
    cert.add_group(tag + ".upper", upper);
    cert.add_group(tag + ".lower", lower);
    cert.add_group(tag + ".B", b);
    cert.add(FactKind::kContains, {"Qbar", tag});
    cert.add(FactKind::kElementOrder, {tag}, betas[i].order());
    if (k1.kernel) {
      cert.add_group(tag + ".upper_kernel", *k1.kernel);
      add_complement_facts(cert, tag + ".upper", tag + ".B", tag + ".upper_kernel", upper.order());
    }
    if (k2.kernel) {
      cert.add_group(tag + ".lower_kernel", *k2.kernel);
      cert.add_group(tag + ".beta", beta);
      add_complement_facts(cert, tag + ".lower", tag + ".beta", tag + ".lower_kernel", lower.order());
    }
  }
  rep.add_check("double_frobenius", all, detail);
  rep.settle();
  return rep;
}

}  // namespace tig
