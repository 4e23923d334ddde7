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

#include "tigroup/grouplat/section.h"

#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"

namespace tig {

Permutation least_in_coset(const PermutationGroup& l, const Permutation& x) {
  Permutation y = x;
  for (const auto& level : l.chain().levels()) {
    // Elements of the current stabilizer send the base point to some orbit
    // point d; the coset element then sends it to y[d].
    std::size_t best = 0;
    for (std::size_t j = 1; j < level.orbit.size(); ++j) {
      if (y[level.orbit[j]] < y[level.orbit[best]]) best = j;
    }
    if (best != 0) y = level.transversal[best] * y;
  }
  return y;
}

Permutation Section::project(const Permutation& k) const {
  const Data& d = *data_;
  if (!d.top.contains(k)) throw InvalidInput("element " + to_cycle_string(k) + " is not in the section's top group");
  if (d.bottom.is_trivial()) return k;
  const std::size_t m = d.representatives.size();
  std::vector<Point> images(m);
  for (std::size_t i = 0; i < m; ++i) {
    images[i] = static_cast<Point>(d.index.at(least_in_coset(d.bottom, d.representatives[i] * k).key()));
  }
  return Permutation(std::move(images));
}

PermutationGroup Section::image(const PermutationGroup& k) const {
  std::vector<Permutation> gens;
  for (const auto& x : k.generators()) gens.push_back(project(x));
  return PermutationGroup(data_->quotient.degree(), std::move(gens));
}

Permutation Section::coset_representative(std::uint64_t i) const {
  if (data_->bottom.is_trivial()) return data_->top.chain().unrank(i);
  return data_->representatives.at(static_cast<std::size_t>(i));
}

std::uint64_t Section::coset_index(const Permutation& x) const {
  const Data& d = *data_;
  if (d.bottom.is_trivial()) {
    auto r = d.top.chain().rank(x);
    if (!r) throw InvalidInput("element " + to_cycle_string(x) + " is not in the section's top group");
    return *r;
  }
  auto it = d.index.find(least_in_coset(d.bottom, x).key());
  if (it == d.index.end()) {
    throw InvalidInput("element " + to_cycle_string(x) + " is not in the section's top group");
  }
  return it->second;
}

Section quotient(const PermutationGroup& k, const PermutationGroup& l, const Bounds& bounds) {
  if (k.degree() != l.degree()) throw InvalidInput("quotient: degree mismatch");
  if (!k.contains(l) || !normalizes(k, l)) throw InvalidInput("quotient: bottom group is not normal in top group");
  const std::uint64_t index = k.order() / l.order();
  if (index > bounds.enumeration) {
    throw BoundExceeded("quotient of index " + std::to_string(index) + " exceeds enumeration bound " +
                        std::to_string(bounds.enumeration));
  }
  auto data = std::make_shared<Section::Data>();
  data->top = k;
  data->bottom = l;
  if (l.is_trivial()) {
    data->quotient = k;
    Section s;
    s.data_ = std::move(data);
    return s;
  }

  const auto& gens = k.generators();
  std::vector<std::vector<Point>> actions(gens.size());
  Permutation id(k.degree());
  data->representatives.push_back(id);
  data->index.emplace(id.key(), 0);
  for (std::size_t head = 0; head < data->representatives.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation next = least_in_coset(l, data->representatives[head] * gens[s]);
      auto [it, inserted] = data->index.emplace(next.key(), data->representatives.size());
      if (inserted) data->representatives.push_back(std::move(next));
      actions[s].push_back(static_cast<Point>(it->second));
    }
  }
  std::vector<Permutation> qgens;
  for (auto& a : actions) qgens.emplace_back(std::move(a));
  data->quotient = PermutationGroup(data->representatives.size(), std::move(qgens));
  Section s;
  s.data_ = std::move(data);
  return s;
}

}  // namespace tig
