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

#include "tigroup/tiprops/frobenius.h"

#include "tigroup/grouplat/orbit.h"
#include "tigroup/grouplat/primes.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"
#include "tigroup/tiprops/ti.h"

namespace tig {

std::vector<Permutation> prime_order_representatives(const PermutationGroup& h, const Bounds& bounds) {
  std::vector<Permutation> out;
  for_each_element(
      h,
      [&](const Permutation& x) {
        const std::uint64_t p = x.order();
        if (!is_prime(p)) return true;
        Permutation y = x;
        for (std::uint64_t k = 2; k < p; ++k) {
          y *= x;
          if (y < x) return true;
        }
        out.push_back(x);
        return true;
      },
      bounds);
  return out;
}

std::uint64_t fixed_coset_count(const Permutation& x, const Section& v) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < v.coset_count(); ++i) {
    if (v.coset_index(v.coset_representative(i).conjugate_by(x)) == i) ++count;
  }
  return count;
}

namespace {

void require_normalizes(const PermutationGroup& h, const Section& v) {
  if (!normalizes(h, v.top()) || !normalizes(h, v.bottom())) {
    throw InvalidInput("acting group does not normalize the section");
  }
}

}  // namespace

std::optional<std::pair<Permutation, Permutation>> find_fixed_coset(const PermutationGroup& h, const Section& v,
                                                                    const Bounds& bounds) {
  require_normalizes(h, v);
  for (const auto& x : prime_order_representatives(h, bounds)) {
    for (std::uint64_t i = 1; i < v.coset_count(); ++i) {
      Permutation rep = v.coset_representative(i);
      if (v.coset_index(rep.conjugate_by(x)) == i) return std::make_pair(x, rep);
    }
  }
  return std::nullopt;
}

bool is_frobenius_action(const PermutationGroup& h, const Section& v, const Bounds& bounds) {
  return !find_fixed_coset(h, v, bounds).has_value();
}

KernelResult frobenius_kernel(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds) {
  const std::string id = "frobenius_kernel";
  if (!g.contains(h)) throw InvalidInput("frobenius_kernel: subgroup is not contained in the group");
  if (h.is_trivial() || h.order() == g.order()) return {not_applicable(id, "H is trivial or equal to G"), {}};
  if (!is_ti(g, h, bounds).ti) return {not_applicable(id, "H is not a T.I. subgroup"), {}};
  if (normalizer(g, h, bounds).order() != h.order()) return {not_applicable(id, "H is not self-normalizing"), {}};
  require_order_at_most(g, bounds.enumeration, "kernel construction");

  const auto& chain = g.chain();
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  KeyedOrbit orbit = subgroup_conjugation_orbit(g, h, bounds);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto r : decode_ranks(orbit.key(i))) covered[static_cast<std::size_t>(r)] = true;
  }
  const Permutation identity(g.degree());
  covered[static_cast<std::size_t>(*chain.rank(identity))] = false;
  std::vector<Permutation> members;
  for (std::size_t r = 0; r < covered.size(); ++r) {
    if (!covered[r]) members.push_back(chain.unrank(r));
  }
  PermutationGroup n = generate_greedy(g.degree(), members);

  KernelResult out;
  TheoremReport& rep = out.report;
  rep.statement = id;
  const std::uint64_t set_size = members.size();
  rep.add_check("closed_under_products", n.order() == set_size,
                "set of size " + std::to_string(set_size) + " generates a group of order " +
                    std::to_string(n.order()));
  rep.add_check("normal", normalizes(g, n));
  rep.add_check("order_product", set_size * h.order() == g.order(),
                std::to_string(set_size) + " * " + std::to_string(h.order()) + " vs " + std::to_string(g.order()));
  const std::uint64_t meet = intersection(n, h, bounds).order();
  rep.add_check("trivial_intersection", meet == 1);
  rep.add_check("full_product", n.order() / meet * h.order() == g.order());
  rep.add_check("nilpotent", is_nilpotent(n));

  Certificate& cert = rep.certificate;
  cert.add_group("G", g);
  cert.add_group("H", h);
  cert.add_group("N", n);
  cert.add(FactKind::kOrder, {"G"}, g.order());
  cert.add(FactKind::kOrder, {"H"}, h.order());
  cert.add(FactKind::kOrder, {"N"}, n.order());
  cert.add(FactKind::kSubgroup, {"G", "N"});
  cert.add(FactKind::kSubgroup, {"G", "H"});
  if (normalizes(g, n)) cert.add(FactKind::kNormalizes, {"G", "N"});
  if (meet == 1) cert.add(FactKind::kTrivialIntersection, {"N", "H"});
  cert.add(FactKind::kProductOrder, {"N", "H"}, n.order() / meet * h.order());
  rep.settle();
  if (rep.verdict == Verdict::kHolds) out.kernel = n;
  return out;
}

FrobeniusWitness build_frobenius_witness(const PermutationGroup& h, const Section& v, const Bounds& bounds) {
  if (h.is_trivial()) throw InvalidInput("Frobenius witness needs a nontrivial acting group");
  require_normalizes(h, v);
  const std::uint64_t m = v.coset_count();
  if (m > bounds.enumeration) {
    throw BoundExceeded("section of order " + std::to_string(m) + " exceeds enumeration bound");
  }
  std::vector<Permutation> reps;
  reps.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t i = 0; i < m; ++i) reps.push_back(v.coset_representative(i));

  auto induced = [&](auto&& image_of) {
    std::vector<Point> images(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Point>(v.coset_index(image_of(reps[i])));
    return Permutation(std::move(images));
  };
  std::vector<Permutation> kgens;
  for (const auto& s : v.top().generators()) {
    kgens.push_back(induced([&](const Permutation& x) { return x * s; }));
  }
  std::vector<Permutation> hgens;
  for (const auto& y : h.generators()) {
    hgens.push_back(induced([&](const Permutation& x) { return x.conjugate_by(y); }));
  }
  std::vector<Permutation> all = kgens;
  all.insert(all.end(), hgens.begin(), hgens.end());
  FrobeniusWitness w{PermutationGroup(static_cast<std::size_t>(m), std::move(all)),
                     PermutationGroup(static_cast<std::size_t>(m), std::move(hgens)),
                     PermutationGroup(static_cast<std::size_t>(m), std::move(kgens))};
  if (m == 1 || w.complement.order() != h.order()) {
    throw InvalidInput("acting group is not faithful on the section");
  }
  KernelResult k = frobenius_kernel(w.group, w.complement, bounds);
  if (!k.kernel || !same_group(*k.kernel, w.kernel)) {
    throw InvalidInput("the action on the section is not Frobenius");
  }
  return w;
}

std::optional<Section> find_frobenius_section(const PermutationGroup& o, const PermutationGroup& h,
                                              const Bounds& bounds) {
  auto try_group = [&](const PermutationGroup& l) -> std::optional<Section> {
    if (l.is_trivial()) return std::nullopt;
    PermutationGroup lp = derived_subgroup(l);
    if (lp.order() == l.order()) return std::nullopt;
    Section v = quotient(l, lp, bounds);
    if (is_frobenius_action(h, v, bounds)) return v;
    return std::nullopt;
  };
  if (auto v = try_group(commutator(o, h))) return v;
  for (auto p : prime_divisors(o.order())) {
    auto s = invariant_sylow(o, h, p, bounds);
    if (!s) continue;
    if (auto v = try_group(commutator(*s, h))) return v;
  }
  return std::nullopt;
}

}  // namespace tig
