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

#include "tigroup/grouplat/cayley.h"

#include <algorithm>
#include <bit>
#include <cstring>

#include "tigroup/permcore/errors.h"

namespace tig {

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string ElementSet::key() const {
  std::string out(words_.size() * sizeof(std::uint64_t), '\0');
  std::memcpy(out.data(), words_.data(), out.size());
  return out;
}

namespace {

bool has_member_above(const std::vector<std::uint64_t>& words, std::size_t w, std::uint64_t low) {
  std::uint64_t above = words[w] & ~(low | (low - 1));
  if (above != 0) return true;
  for (std::size_t v = w + 1; v < words.size(); ++v) {
    if (words[v] != 0) return true;
  }
  return false;
}

}  // namespace

bool lex_less(const ElementSet& a, const ElementSet& b) {
  // At the first differing index i, the set containing i is smaller unless
  // the other sequence has already ended.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    std::uint64_t low = diff & (~diff + 1);
    if ((a.words_[w] & low) != 0) return has_member_above(b.words_, w, low);
    return !has_member_above(a.words_, w, low);
  }
  return false;
}

CayleyTable::CayleyTable(const PermutationGroup& g, std::uint64_t limit) : group_(g) {
  require_order_at_most(g, limit, "multiplication table");
  const auto& chain = g.chain();
  elements_ = elements(g, Bounds{.enumeration = limit});
  const std::size_t m = elements_.size();
  rank_to_index_.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    rank_to_index_[static_cast<std::size_t>(*chain.rank(elements_[i]))] = static_cast<std::uint32_t>(i);
  }

  const auto& gens = g.generators();
  std::vector<std::vector<std::uint32_t>> right(gens.size(), std::vector<std::uint32_t>(m));
  for (std::size_t s = 0; s < gens.size(); ++s) {
    for (std::size_t i = 0; i < m; ++i) right[s][i] = index_of(elements_[i] * gens[s]);
    generators_.push_back(index_of(gens[s]));
  }

  // Columns in BFS order over the Cayley graph: x * (y * s) = (x * y) * s.
  table_.assign(m * m, 0);
  std::vector<bool> done(m, false);
  std::vector<std::uint32_t> queue{0};
  done[0] = true;
  for (std::size_t x = 0; x < m; ++x) table_[x * m] = static_cast<std::uint32_t>(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t y = queue[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::uint32_t ys = right[s][y];
      if (done[ys]) continue;
      done[ys] = true;
      queue.push_back(ys);
      for (std::size_t x = 0; x < m; ++x) table_[x * m + ys] = right[s][table_[x * m + y]];
    }
  }

  inverse_.assign(m, 0);
  orders_.assign(m, 1);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (table_[x * m + y] == 0) {
        inverse_[x] = static_cast<std::uint32_t>(y);
        break;
      }
    }
    orders_[x] = elements_[x].order();
  }
}

std::uint32_t CayleyTable::index_of(const Permutation& x) const {
  auto r = group_.chain().rank(x);
  if (!r) throw InvalidInput("element " + to_cycle_string(x) + " is not in the group");
  return rank_to_index_[static_cast<std::size_t>(*r)];
}

ElementSet CayleyTable::closure(const std::vector<std::uint32_t>& gens) const {
  ElementSet set(size());
  std::vector<std::uint32_t> list{0};
  set.insert(0);
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (auto s : gens) {
      std::uint32_t y = mul(list[head], s);
      if (set.contains(y)) continue;
      set.insert(y);
      list.push_back(y);
    }
  }
  return set;
}

ElementSet CayleyTable::conjugate(const ElementSet& s, std::uint32_t t) const {
  ElementSet out(size());
  for (auto x : s.members()) out.insert(conj(x, t));
  return out;
}

std::vector<std::uint32_t> CayleyTable::generating_set(const ElementSet& s) const {
  std::vector<std::uint32_t> gens;
  ElementSet current = closure({});
  std::size_t target = s.count();
  // Prefer high-order elements so the generating set stays short.
  auto members = s.members();
  std::stable_sort(members.begin(), members.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return orders_[a] > orders_[b]; });
  for (auto x : members) {
    if (current.count() == target) break;
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = closure(gens);
  }
  return gens;
}

PermutationGroup CayleyTable::to_group(const ElementSet& s) const {
  std::vector<Permutation> gens;
  for (auto x : generating_set(s)) gens.push_back(elements_[x]);
  return PermutationGroup(group_.degree(), std::move(gens));
}

std::shared_ptr<const CayleyTable> cayley_table(const PermutationGroup& g, std::uint64_t limit) {
  require_order_at_most(g, limit, "multiplication table");
  return g.cached<CayleyTable>("cayley", [&] { return std::make_shared<const CayleyTable>(g, limit); });
}

}  // namespace tig
