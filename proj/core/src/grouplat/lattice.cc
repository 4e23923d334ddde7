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

#include "tigroup/grouplat/lattice.h"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "tigroup/grouplat/cayley.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"

namespace tig {

bool subgroup_less(const PermutationGroup& a, const PermutationGroup& b, const Bounds& bounds) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (same_group(a, b)) return false;
  auto ea = elements(a, bounds);
  auto eb = elements(b, bounds);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

namespace {

struct TableClass {
  ElementSet rep;
  std::uint64_t size;
};

std::vector<SubgroupClass> build_subgroup_classes(const CayleyTable& t) {
  const auto m = static_cast<std::uint32_t>(t.size());
  std::unordered_set<std::string> seen;
  std::vector<TableClass> found;

  auto add_class = [&](const ElementSet& s) {
    std::vector<ElementSet> orbit{s};
    seen.insert(s.key());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (auto g : t.generators()) {
        ElementSet c = t.conjugate(orbit[head], g);
        if (seen.insert(c.key()).second) orbit.push_back(std::move(c));
      }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < orbit.size(); ++i) {
      if (lex_less(orbit[i], orbit[best])) best = i;
    }
    found.push_back({orbit[best], orbit.size()});
  };

  add_class(t.closure({}));
  for (std::size_t c = 0; c < found.size(); ++c) {
    const ElementSet u = found[c].rep;
    const auto umembers = u.members();
    auto gens = t.generating_set(u);
    ElementSet covered = u;
    for (std::uint32_t g = 0; g < m; ++g) {
      if (covered.contains(g)) continue;
      // <U, x> is the same group for every x in U g^k with k prime to |g|.
      const std::uint64_t ord = t.element_order(g);
      std::uint32_t gk = g;
      for (std::uint64_t k = 1; k <= ord; ++k) {
        if (std::gcd(k, ord) == 1) {
          for (auto x : umembers) covered.insert(t.mul(x, gk));
        }
        gk = t.mul(gk, g);
      }
      gens.push_back(g);
      ElementSet k = t.closure(gens);
      gens.pop_back();
      if (!seen.contains(k.key())) add_class(k);
    }
  }

  std::sort(found.begin(), found.end(), [](const TableClass& a, const TableClass& b) {
    auto ca = a.rep.count();
    auto cb = b.rep.count();
    if (ca != cb) return ca < cb;
    return lex_less(a.rep, b.rep);
  });
  std::vector<SubgroupClass> out;
  out.reserve(found.size());
  for (const auto& f : found) {
    out.push_back({t.to_group(f.rep), f.rep.count(), f.size});
  }
  return out;
}

}  // namespace

std::shared_ptr<const std::vector<SubgroupClass>> subgroup_classes(const PermutationGroup& g,
                                                                   const Bounds& bounds) {
  require_order_at_most(g, bounds.subgroups, "subgroup enumeration");
  return g.cached<std::vector<SubgroupClass>>("subgroup_classes", [&] {
    auto table = cayley_table(g, bounds.subgroups);
    return std::make_shared<const std::vector<SubgroupClass>>(build_subgroup_classes(*table));
  });
}

std::vector<PermutationGroup> subgroups_up_to_conjugacy(const PermutationGroup& g, const Bounds& bounds) {
  std::vector<PermutationGroup> out;
  for (const auto& c : *subgroup_classes(g, bounds)) out.push_back(c.representative);
  return out;
}

std::shared_ptr<const ConjugacyClasses> conjugacy_classes(const PermutationGroup& g, const Bounds& bounds) {
  require_order_at_most(g, bounds.enumeration, "conjugacy classes");
  return g.cached<ConjugacyClasses>("conjugacy_classes", [&] {
    const auto& chain = g.chain();
    const auto& gens = g.generators();
    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    auto result = std::make_shared<ConjugacyClasses>();
    result->class_of_rank.assign(static_cast<std::size_t>(g.order()), kUnset);
    auto& class_of_rank = result->class_of_rank;
    std::vector<ConjugacyClass> found;
    for_each_element(
        g,
        [&](const Permutation& x) {
          auto r = static_cast<std::size_t>(*chain.rank(x));
          if (class_of_rank[r] != kUnset) return true;
          const auto id = static_cast<std::uint32_t>(found.size());
          class_of_rank[r] = id;
          std::vector<Permutation> queue{x};
          for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const auto& s : gens) {
              Permutation y = queue[head].conjugate_by(s);
              auto ry = static_cast<std::size_t>(*chain.rank(y));
              if (class_of_rank[ry] != kUnset) continue;
              class_of_rank[ry] = id;
              queue.push_back(std::move(y));
            }
          }
          found.push_back({x, queue.size(), x.order()});
          return true;
        },
        bounds);

    std::vector<std::uint32_t> perm(found.size());
    std::iota(perm.begin(), perm.end(), 0U);
    std::stable_sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
      return found[a].element_order < found[b].element_order;
    });
    std::vector<std::uint32_t> new_id(found.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      new_id[perm[i]] = static_cast<std::uint32_t>(i);
      result->classes.push_back(found[perm[i]]);
    }
    for (auto& c : class_of_rank) c = new_id[c];
    return std::shared_ptr<const ConjugacyClasses>(std::move(result));
  });
}

std::size_t class_of(const PermutationGroup& g, const Permutation& x, const Bounds& bounds) {
  auto classes = conjugacy_classes(g, bounds);
  auto r = g.chain().rank(x);
  if (!r) throw InvalidInput("element " + to_cycle_string(x) + " is not in the group");
  return classes->class_of_rank[static_cast<std::size_t>(*r)];
}

std::shared_ptr<const std::vector<PermutationGroup>> normal_subgroups(const PermutationGroup& g,
                                                                      const Bounds& bounds) {
  return g.cached<std::vector<PermutationGroup>>("normal_subgroups", [&] {
    auto classes = conjugacy_classes(g, bounds);
    auto add_unique = [](std::vector<PermutationGroup>& list, const PermutationGroup& n) {
      for (const auto& m : list) {
        if (m.order() == n.order() && m.contains(n)) return false;
      }
      list.push_back(n);
      return true;
    };

    std::vector<PermutationGroup> closures;
    for (const auto& c : classes->classes) {
      if (c.representative.is_identity()) continue;
      add_unique(closures, normal_closure(g, std::vector<Permutation>{c.representative}));
    }
    std::vector<PermutationGroup> result{PermutationGroup::trivial(g.degree())};
    for (std::size_t i = 0; i < result.size(); ++i) {
      for (const auto& c : closures) {
        if (result[i].contains(c)) continue;
        PermutationGroup j = join(result[i], c);
        add_unique(result, j);
      }
    }
    std::sort(result.begin(), result.end(),
              [&](const PermutationGroup& a, const PermutationGroup& b) { return subgroup_less(a, b, bounds); });
    return std::make_shared<const std::vector<PermutationGroup>>(std::move(result));
  });
}

std::vector<PermutationGroup> minimal_normal_subgroups(const PermutationGroup& g, const Bounds& bounds) {
  auto normals = normal_subgroups(g, bounds);
  std::vector<PermutationGroup> out;
  for (const auto& n : *normals) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const auto& m : out) {
      if (n.contains(m)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

std::vector<PermutationGroup> chief_series_terms(const PermutationGroup& g, const Bounds& bounds) {
  auto normals = normal_subgroups(g, bounds);
  std::vector<PermutationGroup> terms{PermutationGroup::trivial(g.degree())};
  while (terms.back().order() != g.order()) {
    const auto& current = terms.back();
    for (const auto& n : *normals) {
      if (n.order() > current.order() && n.contains(current)) {
        terms.push_back(n);
        break;
      }
    }
  }
  return terms;
}

std::vector<Section> chief_series(const PermutationGroup& g, const Bounds& bounds) {
  auto terms = chief_series_terms(g, bounds);
  std::vector<Section> out;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) out.push_back(quotient(terms[i + 1], terms[i], bounds));
  return out;
}

}  // namespace tig
