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

#include "tigroup/grouplat/isomorphism.h"

#include <algorithm>
#include <map>

#include "tigroup/grouplat/cayley.h"
#include "tigroup/grouplat/lattice.h"
#include "tigroup/grouplat/section.h"
#include "tigroup/grouplat/subgroup.h"

namespace tig {

namespace {

std::map<std::uint64_t, std::uint64_t> order_histogram(const CayleyTable& t) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (std::uint32_t x = 0; x < t.size(); ++x) ++h[t.element_order(x)];
  return h;
}

// Short generating set: greedily add the element of largest order that is
// not yet in the span.
std::vector<std::uint32_t> small_generating_set(const CayleyTable& t) {
  ElementSet all(t.size());
  for (std::uint32_t x = 0; x < t.size(); ++x) all.insert(x);
  return t.generating_set(all);
}

class Matcher {
 public:
  Matcher(const CayleyTable& a, const CayleyTable& b, std::vector<std::uint32_t> gens)
      : a_(a), b_(b), gens_(std::move(gens)), images_(gens_.size()) {}

  bool search(std::size_t depth, const std::vector<std::vector<std::uint32_t>>& candidates) {
    if (depth == gens_.size()) return extend(depth, true);
    for (auto c : candidates[depth]) {
      images_[depth] = c;
      if (extend(depth + 1, false) && search(depth + 1, candidates)) return true;
    }
    return false;
  }

  const std::vector<std::uint32_t>& images() const { return images_; }

 private:
  // Extends the partial map over <gens[0..k)> along the Cayley graph and
  // checks it is a well-defined injective homomorphism there.
  bool extend(std::size_t k, bool complete) {
    const std::uint32_t unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> phi(a_.size(), unset);
    std::vector<bool> used(b_.size(), false);
    std::vector<std::uint32_t> queue{0};
    phi[0] = 0;
    used[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t x = queue[head];
      for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t y = a_.mul(x, gens_[i]);
        std::uint32_t fy = b_.mul(phi[x], images_[i]);
        if (phi[y] == unset) {
          if (used[fy]) return false;
          phi[y] = fy;
          used[fy] = true;
          queue.push_back(y);
        } else if (phi[y] != fy) {
          return false;
        }
      }
    }
    return !complete || queue.size() == a_.size();
  }

  const CayleyTable& a_;
  const CayleyTable& b_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::uint32_t> images_;
};

}  // namespace

std::optional<std::vector<Permutation>> find_isomorphism(const PermutationGroup& a, const PermutationGroup& b,
                                                         const Bounds& bounds) {
  require_order_at_most(a, bounds.isomorphism, "isomorphism test");
  require_order_at_most(b, bounds.isomorphism, "isomorphism test");
  if (a.order() != b.order()) return std::nullopt;
  auto ta = cayley_table(a, bounds.isomorphism);
  auto tb = cayley_table(b, bounds.isomorphism);
  if (order_histogram(*ta) != order_histogram(*tb)) return std::nullopt;
  if (is_abelian(a) != is_abelian(b)) return std::nullopt;

  auto gens = small_generating_set(*ta);
  std::vector<std::vector<std::uint32_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::uint32_t y = 0; y < tb->size(); ++y) {
      if (tb->element_order(y) == ta->element_order(gens[i])) candidates[i].push_back(y);
    }
  }
  if (!candidates.empty()) {
    // Composing with an inner automorphism of b moves the first image
    // anywhere in its class, so one image per class suffices.
    std::vector<std::uint32_t> reps;
    ElementSet covered(tb->size());
    for (auto y : candidates[0]) {
      if (covered.contains(y)) continue;
      reps.push_back(y);
      std::vector<std::uint32_t> queue{y};
      covered.insert(y);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto s : tb->generators()) {
          auto z = tb->conj(queue[head], s);
          if (!covered.contains(z)) {
            covered.insert(z);
            queue.push_back(z);
          }
        }
      }
    }
    candidates[0] = std::move(reps);
  }

  Matcher matcher(*ta, *tb, gens);
  if (!matcher.search(0, candidates)) return std::nullopt;
  // Express the map on a's own generators.
  std::vector<Permutation> out;
  const auto& images = matcher.images();
  for (const auto& g : a.generators()) {
    // Write g as a word in gens by BFS, then evaluate the word in b.
    std::uint32_t target = ta->index_of(g);
    std::vector<std::int64_t> parent(ta->size(), -1), via(ta->size(), -1);
    std::vector<std::uint32_t> queue{0};
    parent[0] = 0;
    for (std::size_t head = 0; head < queue.size() && parent[target] < 0; ++head) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto y = ta->mul(queue[head], gens[i]);
        if (parent[y] >= 0) continue;
        parent[y] = queue[head];
        via[y] = static_cast<std::int64_t>(i);
        queue.push_back(y);
      }
    }
    std::vector<std::size_t> word;
    for (std::uint32_t x = target; x != 0; x = static_cast<std::uint32_t>(parent[x])) {
      word.push_back(static_cast<std::size_t>(via[x]));
    }
    std::uint32_t img = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) img = tb->mul(img, images[*it]);
    out.push_back(tb->element(img));
  }
  return out;
}

bool isomorphic(const PermutationGroup& a, const PermutationGroup& b, const Bounds& bounds) {
  return find_isomorphism(a, b, bounds).has_value();
}

bool involves(const PermutationGroup& g, const PermutationGroup& t, const Bounds& bounds) {
  require_order_at_most(g, bounds.subgroups, "section search");
  const std::uint64_t target = t.order();
  if (g.order() % target != 0) return false;
  for (const auto& cls : *subgroup_classes(g, bounds)) {
    const auto& k = cls.representative;
    if (k.order() % target != 0) continue;
    for (const auto& l : *normal_subgroups(k, bounds)) {
      if (k.order() / l.order() != target) continue;
      Section s = quotient(k, l, bounds);
      if (isomorphic(s.quotient(), t, bounds)) return true;
    }
  }
  return false;
}

}  // namespace tig
