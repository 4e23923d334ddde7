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

#ifndef TIGROUP_GROUPLAT_CAYLEY_H_
#define TIGROUP_GROUPLAT_CAYLEY_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tigroup/permcore/perm_group.h"

namespace tig {

// Set of element indices of a CayleyTable, as a fixed-size bitset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0), universe_(universe) {}

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const;
  std::size_t universe() const { return universe_; }
  std::vector<std::uint32_t> members() const;
  // Raw bytes; equal sets have equal keys.
  std::string key() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  // Lexicographic comparison of the sorted member lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b);

 private:
  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
};

// Multiplication table of a small group. Elements are indexed in increasing
// lexicographic order of their image arrays, so index 0 is the identity and
// comparing sorted index lists compares element sequences.
class CayleyTable {
 public:
  // Throws BoundExceeded when |g| > limit.
  CayleyTable(const PermutationGroup& g, std::uint64_t limit);

  std::size_t size() const { return elements_.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * size() + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t conj(std::uint32_t a, std::uint32_t t) const { return mul(mul(inverse_[t], a), t); }
  std::uint64_t element_order(std::uint32_t a) const { return orders_[a]; }
  const Permutation& element(std::uint32_t a) const { return elements_[a]; }
  std::uint32_t index_of(const Permutation& x) const;
  const std::vector<std::uint32_t>& generators() const { return generators_; }
  const PermutationGroup& group() const { return group_; }

  // Subgroup generated by `gens`.
  ElementSet closure(const std::vector<std::uint32_t>& gens) const;
  ElementSet conjugate(const ElementSet& s, std::uint32_t t) const;
  // Greedy generating set of a subgroup given as a set.
  std::vector<std::uint32_t> generating_set(const ElementSet& s) const;
  PermutationGroup to_group(const ElementSet& s) const;

 private:
  PermutationGroup group_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> rank_to_index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> generators_;
};

// Table shared through the group's cache. Throws BoundExceeded when
// |g| > limit.
std::shared_ptr<const CayleyTable> cayley_table(const PermutationGroup& g, std::uint64_t limit);

}  // namespace tig

#endif  // TIGROUP_GROUPLAT_CAYLEY_H_
