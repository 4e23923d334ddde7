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

#ifndef TIGROUP_GROUPLAT_LATTICE_H_
#define TIGROUP_GROUPLAT_LATTICE_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "tigroup/grouplat/section.h"
#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"

namespace tig {

// Ordering used for every subgroup list: by order, then by the sorted
// element sequence (lexicographic on image arrays).
bool subgroup_less(const PermutationGroup& a, const PermutationGroup& b, const Bounds& bounds = {});

struct SubgroupClass {
  PermutationGroup representative;
  std::uint64_t order = 1;
  // Number of conjugates.
  std::uint64_t size = 1;
};

// Conjugacy classes of subgroups, found by cyclic extension <U, g> of class
// representatives U over a multiplication table. Representatives are the
// least member of each class; the list is sorted with subgroup_less.
// Throws BoundExceeded when |g| > bounds.subgroups.
std::shared_ptr<const std::vector<SubgroupClass>> subgroup_classes(const PermutationGroup& g,
                                                                   const Bounds& bounds = {});
std::vector<PermutationGroup> subgroups_up_to_conjugacy(const PermutationGroup& g,
                                                        const Bounds& bounds = {});

struct ConjugacyClass {
  // Least element of the class.
  Permutation representative;
  std::uint64_t size = 1;
  std::uint64_t element_order = 1;
};

// Element classes sorted by (element order, representative).
struct ConjugacyClasses {
  std::vector<ConjugacyClass> classes;
  // Class index per chain rank of the element.
  std::vector<std::uint32_t> class_of_rank;
};

// Throws BoundExceeded when |g| > bounds.enumeration.
std::shared_ptr<const ConjugacyClasses> conjugacy_classes(const PermutationGroup& g,
                                                          const Bounds& bounds = {});
// Index into conjugacy_classes(g).classes of the class of x.
std::size_t class_of(const PermutationGroup& g, const Permutation& x, const Bounds& bounds = {});

// All normal subgroups, as joins of normal closures of class representatives,
// sorted with subgroup_less.
std::shared_ptr<const std::vector<PermutationGroup>> normal_subgroups(const PermutationGroup& g,
                                                                      const Bounds& bounds = {});
std::vector<PermutationGroup> minimal_normal_subgroups(const PermutationGroup& g,
                                                       const Bounds& bounds = {});

// 1 = N_0 < N_1 < ... < N_r = G, taking at each step the least normal
// subgroup of G properly containing the previous term.
std::vector<PermutationGroup> chief_series_terms(const PermutationGroup& g, const Bounds& bounds = {});
// Factors N_{i+1}/N_i from the bottom up.
std::vector<Section> chief_series(const PermutationGroup& g, const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_GROUPLAT_LATTICE_H_
