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

#include "tigroup/tiprops/analysis.h"

#include "tigroup/corpus/constructors.h"
#include "tigroup/grouplat/isomorphism.h"
#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/tiprops/frobenius.h"
#include "tigroup/tiprops/pi_series.h"
#include "tigroup/tiprops/ti.h"

namespace tig {

namespace {

bool involves_sl25(const PermutationGroup& h, const Bounds& bounds) {
  if (h.order() % 120 != 0) return false;
  return involves(h, sl2(5), bounds);
}

std::string order_text(const PermutationGroup& g) { return std::to_string(g.order()); }

}  // namespace

TIHallContext ti_hall_context(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds) {
  TIHallContext ctx;
  ctx.pi = PrimeSet::of_order(h.order());
  ctx.normalizer = PermutationGroup::trivial(g.degree());
  ctx.o_pi_prime = PermutationGroup::trivial(g.degree());
  auto hyp = [&](const char* name, bool ok, std::string detail = {}) {
    ctx.hypotheses.push_back({name, ok ? Verdict::kHolds : Verdict::kFails, std::move(detail), true});
    if (!ok && ctx.failed.empty()) ctx.failed = name;
  };
  const bool proper = !h.is_trivial() && h.order() != g.order();
  hyp("proper_nontrivial", proper);
  if (!proper) return ctx;
  ctx.normalizer = normalizer(g, h, bounds);
  hyp("nonnormal", ctx.normalizer.order() != g.order());
  hyp("ti", is_ti(g, h, bounds).ti);
  hyp("hall_in_normalizer", is_hall_in(h, ctx.normalizer),
      "|H| = " + order_text(h) + ", |N_G(H)| = " + order_text(ctx.normalizer));
  ctx.o_pi_prime = pi_core(g, ctx.pi.complement_in(g.order()), bounds);
  PiSeries series = pi_series(g, ctx.pi, bounds);
  ctx.pi_length = series.pi_length;
  hyp("pi_separable", series.separable, "pi = " + ctx.pi.to_string());
  return ctx;
}

TIHallAnalysis analyze_ti_hall(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds) {
  const std::string id = "ti_hall_structure";
  TIHallAnalysis a;
  a.context = ti_hall_context(g, h, bounds);
  const TIHallContext& ctx = a.context;
  const PermutationGroup& o = ctx.o_pi_prime;
  a.l_subgroup = PermutationGroup::trivial(g.degree());
  const bool proper = !h.is_trivial() && h.order() != g.order();
  if (proper) a.factorization = product_set_size(o, ctx.normalizer, bounds) == g.order();

  if (!ctx.applicable()) {
    a.report = not_applicable(id, ctx.failed);
    if (a.factorization) {
      a.report.add_clause("factorization", *a.factorization ? Verdict::kHolds : Verdict::kFails,
                          "informational: |O_pi'(G) N_G(H)| == |G| evaluated outside the hypotheses", false);
    }
    return a;
  }

  TheoremReport& rep = a.report;
  rep.statement = id;
  Certificate& cert = rep.certificate;
  cert.add_group("G", g);
  cert.add_group("H", h);
  cert.add_group("O", o);
  cert.add_group("N_G(H)", ctx.normalizer);
  cert.add(FactKind::kOrder, {"G"}, g.order());
  cert.add(FactKind::kOrder, {"O"}, o.order());
  cert.add(FactKind::kOrder, {"N_G(H)"}, ctx.normalizer.order());
  cert.add(FactKind::kNormalizes, {"G", "O"});
  cert.add(FactKind::kProductOrder, {"O", "N_G(H)"}, product_set_size(o, ctx.normalizer, bounds));

  // Structure of G.
  rep.add_check("pi_length_one", ctx.pi_length == 1,
                "pi-length " + (ctx.pi_length ? std::to_string(*ctx.pi_length) : std::string("undefined")));
  rep.add_check("factorization", *a.factorization,
                "|O| = " + order_text(o) + ", |N_G(H)| = " + order_text(ctx.normalizer));
  a.l_subgroup = commutator(o, h);
  a.complement = hall(ctx.normalizer, ctx.pi.complement_in(ctx.normalizer.order()), bounds);

  // Frobenius action on a section of O.
  a.frobenius_section = find_frobenius_section(o, h, bounds);
  rep.add_check("frobenius_section", a.frobenius_section.has_value(),
                a.frobenius_section ? "section of order " + std::to_string(a.frobenius_section->order())
                                    : "no H-invariant section with Frobenius action found");
  if (a.frobenius_section) {
    cert.add_group("V.top", a.frobenius_section->top());
    cert.add_group("V.bottom", a.frobenius_section->bottom());
    cert.add(FactKind::kSubgroup, {"O", "V.top"});
    cert.add(FactKind::kSubgroup, {"V.top", "V.bottom"});
    cert.add(FactKind::kNormalizes, {"H", "V.top"});
    cert.add(FactKind::kNormalizes, {"H", "V.bottom"});
    cert.add(FactKind::kNormalizes, {"V.top", "V.bottom"});
  }

  const auto primes = prime_order_representatives(h, bounds);
  for (const auto& factor : chief_series(g, bounds)) {
    ChiefFactorAction action{factor, 1};
    for (const auto& x : primes) action.max_fixed = std::max(action.max_fixed, fixed_coset_count(x, factor));
    a.chief_factors.push_back(std::move(action));
  }

  const bool o_solvable = is_solvable(o);
  if (o_solvable) {
    const PermutationGroup& l = a.l_subgroup;
    PermutationGroup lp = derived_subgroup(l);
    std::vector<PermutationGroup> between;
    for (const auto& n : *normal_subgroups(g, bounds)) {
      if (l.contains(n) && n.contains(lp)) between.push_back(n);
    }
    for (std::size_t ki = 0; ki < between.size() && !a.chief_frobenius_factor; ++ki) {
      const auto& k = between[ki];
      for (std::size_t mi = 0; mi < ki; ++mi) {
        const auto& m = between[mi];
        if (m.order() >= k.order() || !k.contains(m)) continue;
        bool chief = true;
        for (std::size_t xi = mi + 1; xi < ki && chief; ++xi) {
          const auto& x = between[xi];
          if (x.order() > m.order() && x.order() < k.order() && x.contains(m) && k.contains(x)) chief = false;
        }
        if (!chief) continue;
        Section v = quotient(k, m, bounds);
        if (is_frobenius_action(h, v, bounds)) {
          a.chief_frobenius_factor = v;
          break;
        }
      }
    }
    rep.add_check("chief_factor_frobenius", a.chief_frobenius_factor.has_value(),
                  a.chief_frobenius_factor
                      ? "chief factor of order " + std::to_string(a.chief_frobenius_factor->order())
                      : "no chief factor between [O,H]' and [O,H] with Frobenius action");
    if (a.chief_frobenius_factor) {
      cert.add_group("C.top", a.chief_frobenius_factor->top());
      cert.add_group("C.bottom", a.chief_frobenius_factor->bottom());
      cert.add(FactKind::kNormalizes, {"G", "C.top"});
      cert.add(FactKind::kNormalizes, {"G", "C.bottom"});
      cert.add(FactKind::kSubgroup, {"C.top", "C.bottom"});
    }
  } else {
    rep.add_clause("chief_factor_frobenius", Verdict::kHolds, "O is not solvable; the clause does not apply", false);
    // Record a fixed coset on the first chief factor as evidence.
    for (std::size_t i = 0; i < a.chief_factors.size(); ++i) {
      if (a.chief_factors[i].max_fixed <= 1) continue;
      if (auto fixed = find_fixed_coset(h, a.chief_factors[i].factor, bounds)) {
        std::string tag = "chief" + std::to_string(i);
        cert.add_group(tag + ".top", a.chief_factors[i].factor.top());
        cert.add_group(tag + ".bottom", a.chief_factors[i].factor.bottom());
        cert.add_element(tag + ".h", fixed->first);
        cert.add_element(tag + ".x", fixed->second);
        cert.add(FactKind::kContains, {"H", tag + ".h"});
        cert.add(FactKind::kFixedCoset, {tag + ".h", tag + ".x", tag + ".top", tag + ".bottom"});
      }
      break;
    }
  }

  // Solvability criterion.
  const bool g_solvable = is_solvable(g);
  const bool inv = involves_sl25(h, bounds);
  a.solvability = {{"G", g_solvable}, {"O", o_solvable}, {"H involves SL(2,5)", inv}};
  rep.add_check("solvability", g_solvable == (o_solvable && !inv),
                std::string("G ") + (g_solvable ? "solvable" : "not solvable") + ", O " +
                    (o_solvable ? "solvable" : "not solvable") + ", H " + (inv ? "involves" : "does not involve") +
                    " SL(2,5)");
  rep.settle();
  return a;
}

TIHallDecomposition decompose_ti_hall(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds) {
  const std::string id = "ti_hall_decomposition";
  TIHallDecomposition d{PermutationGroup::trivial(g.degree()), h, PermutationGroup::trivial(g.degree()), {}};
  TIHallContext ctx = ti_hall_context(g, h, bounds);
  if (!ctx.applicable()) {
    d.report = not_applicable(id, ctx.failed);
    return d;
  }
  d.o = ctx.o_pi_prime;
  TheoremReport& rep = d.report;
  rep.statement = id;
  auto q = hall(ctx.normalizer, ctx.pi.complement_in(ctx.normalizer.order()), bounds);
  rep.add_check("complement_exists", q.has_value(), "Hall pi'-subgroup of N_G(H)");
  if (q) {
    d.q = *q;
    const std::uint64_t meet = intersection(h, d.q, bounds).order();
    rep.add_check("complement", meet == 1 && h.order() * d.q.order() == ctx.normalizer.order(),
                  "|H| = " + order_text(h) + ", |Q| = " + order_text(d.q) + ", |N_G(H)| = " +
                      order_text(ctx.normalizer));
    PermutationGroup oh = join(d.o, h);
    rep.add_check("product_OH", oh.order() == d.o.order() * h.order());
    const std::uint64_t ohq = product_set_size(oh, d.q, bounds);
    rep.add_check("product_OHQ", ohq == g.order(), "|OHQ| = " + std::to_string(ohq));
    Certificate& cert = rep.certificate;
    cert.add_group("G", g);
    cert.add_group("O", d.o);
    cert.add_group("H", h);
    cert.add_group("Q", d.q);
    cert.add_group("OH", oh);
    cert.add(FactKind::kNormalizes, {"G", "O"});
    cert.add(FactKind::kSubgroup, {"G", "Q"});
    cert.add(FactKind::kNormalizes, {"Q", "H"});
    cert.add(FactKind::kTrivialIntersection, {"H", "Q"});
    cert.add(FactKind::kOrder, {"OH"}, oh.order());
    cert.add(FactKind::kProductOrder, {"OH", "Q"}, ohq);
  }
  rep.settle();
  return d;
}

}  // namespace tig
