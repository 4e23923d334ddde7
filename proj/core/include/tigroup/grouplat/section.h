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

#ifndef TIGROUP_GROUPLAT_SECTION_H_
#define TIGROUP_GROUPLAT_SECTION_H_

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"

namespace tig {

// Lexicographically least element of the right coset L x, found greedily
// along L's chain. Used as the canonical name of the coset.
Permutation least_in_coset(const PermutationGroup& l, const Permutation& x);

// K/L with L normal in K. The quotient acts on the right cosets Lx, numbered
// in BFS order from L itself. When L is trivial the quotient is K itself and
// cosets are numbered by chain rank.
class Section {
 public:
  const PermutationGroup& top() const { return data_->top; }
  const PermutationGroup& bottom() const { return data_->bottom; }
  const PermutationGroup& quotient() const { return data_->quotient; }
  std::uint64_t order() const { return data_->top.order() / data_->bottom.order(); }
  bool is_trivial() const { return order() == 1; }

  // Image of k in the quotient; k must lie in K.
  Permutation project(const Permutation& k) const;
  // Image in the quotient of a subgroup of K.
  PermutationGroup image(const PermutationGroup& k) const;

  std::uint64_t coset_count() const { return order(); }
  Permutation coset_representative(std::uint64_t i) const;
  // Index of the coset L x for x in K.
  std::uint64_t coset_index(const Permutation& x) const;

 private:
  friend Section quotient(const PermutationGroup& k, const PermutationGroup& l, const Bounds& bounds);

  struct Data {
    PermutationGroup top;
    PermutationGroup bottom;
    PermutationGroup quotient;
    std::vector<Permutation> representatives;
    std::unordered_map<std::string, std::uint64_t> index;
  };
  std::shared_ptr<const Data> data_;
};

// Throws InvalidInput if L is not a normal subgroup of K, BoundExceeded if
// |K : L| exceeds bounds.enumeration.
Section quotient(const PermutationGroup& k, const PermutationGroup& l, const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_GROUPLAT_SECTION_H_
