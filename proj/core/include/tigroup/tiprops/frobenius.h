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

#ifndef TIGROUP_TIPROPS_FROBENIUS_H_
#define TIGROUP_TIPROPS_FROBENIUS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tigroup/grouplat/section.h"
#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"
#include "tigroup/tiprops/report.h"

namespace tig {

// One element of each subgroup of prime order in h (the least generator).
// A fixed point of any element is fixed by a prime-order power of it, so
// these suffice for fixed-point-freeness.
std::vector<Permutation> prime_order_representatives(const PermutationGroup& h, const Bounds& bounds = {});

// Number of cosets of V fixed by conjugation with x, the trivial coset
// included. x must normalize V's top and bottom groups.
std::uint64_t fixed_coset_count(const Permutation& x, const Section& v);

// (h, coset representative) for a prime-order h in H fixing a nontrivial
// coset of V, or nullopt when the action is Frobenius.
std::optional<std::pair<Permutation, Permutation>> find_fixed_coset(const PermutationGroup& h, const Section& v,
                                                                    const Bounds& bounds = {});

// Every nonidentity element of h fixes only the trivial coset of V. Throws
// InvalidInput if h does not normalize V's top and bottom groups.
bool is_frobenius_action(const PermutationGroup& h, const Section& v, const Bounds& bounds = {});

struct KernelResult {
  TheoremReport report;
  std::optional<PermutationGroup> kernel;
};

// Builds the identity together with every element lying in no conjugate of
// H, and verifies that this set is a normal subgroup complementing H.
// NOT_APPLICABLE unless H is proper, nontrivial, T.I. and self-normalizing.
KernelResult frobenius_kernel(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds = {});

struct FrobeniusWitness {
  // V x| H acting on the cosets of V: V by right multiplication, H by
  // conjugation.
  PermutationGroup group;
  PermutationGroup complement;
  PermutationGroup kernel;
};

// Throws InvalidInput if h is trivial, does not normalize V, or does not act
// as a Frobenius group; BoundExceeded if |V| > bounds.enumeration.
FrobeniusWitness build_frobenius_witness(const PermutationGroup& h, const Section& v, const Bounds& bounds = {});

// A section of O on which H acts as a Frobenius group: L/L' for L = [O, H]
// when that is nontrivial, otherwise R/R' for R = [S, H] over H-invariant
// Sylow subgroups S of O, by increasing prime.
std::optional<Section> find_frobenius_section(const PermutationGroup& o, const PermutationGroup& h,
                                              const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_TIPROPS_FROBENIUS_H_
