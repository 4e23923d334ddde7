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

#include "tigroup/permcore/perm_group.h"

#include <algorithm>
#include <numeric>

#include "tigroup/permcore/errors.h"

namespace tig {

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidInput("generator of degree " + std::to_string(g.degree()) +
                         " in group of degree " + std::to_string(degree));
    }
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

const StabilizerChain& PermutationGroup::chain() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->chain) return *cache_->chain;
  }
  auto built = std::make_shared<const StabilizerChain>(StabilizerChain::build(degree_, generators_));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->chain) cache_->chain = std::move(built);
  return *cache_->chain;
}

bool PermutationGroup::contains(const Permutation& x) const {
  if (x.degree() != degree_) throw InvalidInput("degree mismatch in membership test");
  if (x.is_identity()) return true;
  if (generators_.empty()) return false;
  return chain().contains(x);
}

bool PermutationGroup::contains(const PermutationGroup& sub) const {
  for (const auto& g : sub.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool same_group(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) return false;
  return a.order() == b.order() && a.contains(b);
}

std::uint64_t group_order(const PermutationGroup& g) { return g.order(); }

bool contains(const PermutationGroup& g, const Permutation& x) { return g.contains(x); }

void require_order_at_most(const PermutationGroup& g, std::uint64_t limit, const char* what) {
  if (g.order() > limit) {
    throw BoundExceeded(std::string(what) + ": group order " + std::to_string(g.order()) +
                        " exceeds bound " + std::to_string(limit));
  }
}

namespace {

// Depth-first over chain levels. Candidates at each level are sorted by the
// image of the level's base point under (transversal * suffix), which yields
// lexicographic order of the final elements.
bool enumerate_from(const StabilizerChain& chain, std::size_t level, const Permutation& suffix,
                    const std::function<bool(const Permutation&)>& visit) {
  const auto& levels = chain.levels();
  if (level == levels.size()) return visit(suffix);
  const auto& lv = levels[level];
  std::vector<std::size_t> order(lv.orbit.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return suffix[lv.orbit[a]] < suffix[lv.orbit[b]];
  });
  for (std::size_t idx : order) {
    if (!enumerate_from(chain, level + 1, lv.transversal[idx] * suffix, visit)) return false;
  }
  return true;
}

}  // namespace

void for_each_element(const PermutationGroup& g, const std::function<bool(const Permutation&)>& visit,
                      const Bounds& bounds) {
  require_order_at_most(g, bounds.enumeration, "element enumeration");
  enumerate_from(g.chain(), 0, Permutation(g.degree()), visit);
}

std::vector<Permutation> elements(const PermutationGroup& g, const Bounds& bounds) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(g.order(), bounds.enumeration)));
  for_each_element(
      g,
      [&](const Permutation& x) {
        out.push_back(x);
        return true;
      },
      bounds);
  return out;
}

}  // namespace tig
