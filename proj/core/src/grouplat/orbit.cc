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

#include "tigroup/grouplat/orbit.h"

#include <cstring>

#include "tigroup/permcore/errors.h"

namespace tig {

KeyedOrbit::KeyedOrbit(const PermutationGroup& group, std::string start, const Action& act,
                       std::uint64_t limit)
    : group_(group) {
  const auto& gens = group.generators();
  keys_.push_back(start);
  index_.emplace(std::move(start), 0);
  parent_.push_back(-1);
  via_.push_back(-1);
  for (std::size_t head = 0; head < keys_.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::string next = act(keys_[head], gens[s]);
      auto it = index_.find(next);
      if (it == index_.end()) {
        if (keys_.size() >= limit) {
          throw BoundExceeded("orbit exceeds bound " + std::to_string(limit));
        }
        it = index_.emplace(next, keys_.size()).first;
        keys_.push_back(std::move(next));
        parent_.push_back(static_cast<std::int32_t>(head));
        via_.push_back(static_cast<std::int32_t>(s));
      }
      edges_.push_back(static_cast<std::int32_t>(it->second));
    }
  }
}

std::optional<std::size_t> KeyedOrbit::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Permutation KeyedOrbit::transversal(std::size_t i) const {
  std::vector<std::int32_t> path;
  for (auto j = static_cast<std::int32_t>(i); parent_[static_cast<std::size_t>(j)] >= 0;
       j = parent_[static_cast<std::size_t>(j)]) {
    path.push_back(via_[static_cast<std::size_t>(j)]);
  }
  Permutation t(group_.degree());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    t *= group_.generators()[static_cast<std::size_t>(*it)];
  }
  return t;
}

PermutationGroup KeyedOrbit::stabilizer() const {
  const auto& gens = group_.generators();
  const std::uint64_t target = group_.order() / keys_.size();
  PermutationGroup stab = PermutationGroup::trivial(group_.degree());
  if (target == 1) return stab;
  std::vector<Permutation> stab_gens;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    Permutation u = transversal(i);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto j = static_cast<std::size_t>(edges_[i * gens.size() + s]);
      if (parent_[j] == static_cast<std::int32_t>(i) && via_[j] == static_cast<std::int32_t>(s)) {
        continue;
      }
      Permutation h = u * gens[s] * transversal(j).inverse();
      if (stab.contains(h)) continue;
      stab_gens.push_back(std::move(h));
      stab = PermutationGroup(group_.degree(), stab_gens);
      if (stab.order() == target) return stab;
    }
  }
  return stab;
}

std::string encode_ranks(const std::vector<std::uint64_t>& ranks) {
  std::string out(ranks.size() * sizeof(std::uint64_t), '\0');
  std::memcpy(out.data(), ranks.data(), out.size());
  return out;
}

std::vector<std::uint64_t> decode_ranks(const std::string& key) {
  std::vector<std::uint64_t> out(key.size() / sizeof(std::uint64_t));
  std::memcpy(out.data(), key.data(), key.size());
  return out;
}

}  // namespace tig
