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

#ifndef TIGROUP_GROUPLAT_SUBGROUP_H_
#define TIGROUP_GROUPLAT_SUBGROUP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "tigroup/grouplat/orbit.h"
#include "tigroup/grouplat/primes.h"
#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"

namespace tig {

// A subgroup together with the group it was taken in.
struct SubgroupRel {
  PermutationGroup parent;
  PermutationGroup sub;
};

// Smallest subgroup of `parent` containing `gens`; throws InvalidInput if a
// generator lies outside the parent.
PermutationGroup closure(const PermutationGroup& parent, const std::vector<Permutation>& gens);

// <a, b> for two groups on the same domain.
PermutationGroup join(const PermutationGroup& a, const PermutationGroup& b);

// Subgroup generated by a list of elements, with generators picked greedily
// (an element is kept only if it enlarges the group so far).
PermutationGroup generate_greedy(std::size_t degree, const std::vector<Permutation>& elements);

// Every element of `h` is in `g`'s chain; the sorted ranks of `h`'s elements
// identify `h` as a subgroup of `g`.
std::vector<std::uint64_t> subgroup_ranks(const PermutationGroup& g, const PermutationGroup& h,
                                          const Bounds& bounds = {});

// H^t = t^-1 H t.
PermutationGroup conjugate(const PermutationGroup& h, const Permutation& t);

// True iff every generator of h conjugated by every generator of g lies in h.
bool normalizes(const PermutationGroup& g, const PermutationGroup& h);
bool is_normal(const PermutationGroup& g, const PermutationGroup& h);

PermutationGroup intersection(const PermutationGroup& a, const PermutationGroup& b,
                              const Bounds& bounds = {});

// Orbit of h under conjugation by g (h must lie in g).
KeyedOrbit subgroup_conjugation_orbit(const PermutationGroup& g, const PermutationGroup& h,
                                      const Bounds& bounds = {});

PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h,
                            const Bounds& bounds = {});
PermutationGroup centralizer(const PermutationGroup& g, const PermutationGroup& s,
                             const Bounds& bounds = {});
PermutationGroup centralizer(const PermutationGroup& g, const Permutation& x,
                             const Bounds& bounds = {});
PermutationGroup center(const PermutationGroup& g, const Bounds& bounds = {});

// Largest normal subgroup of g contained in h.
PermutationGroup core(const PermutationGroup& g, const PermutationGroup& h,
                      const Bounds& bounds = {});

PermutationGroup normal_closure(const PermutationGroup& g, const std::vector<Permutation>& s);
PermutationGroup normal_closure(const PermutationGroup& g, const PermutationGroup& s);

// [A, B]: normal closure in <A, B> of the commutators of generators.
PermutationGroup commutator(const PermutationGroup& a, const PermutationGroup& b);
PermutationGroup derived_subgroup(const PermutationGroup& g);

// G = G^(0) > G^(1) > ... until it stabilizes.
std::vector<PermutationGroup> derived_series(const PermutationGroup& g);
bool is_solvable(const PermutationGroup& g);
bool is_abelian(const PermutationGroup& g);
bool is_nilpotent(const PermutationGroup& g);
bool is_cyclic(const PermutationGroup& g, const Bounds& bounds = {});
// Every nonidentity element has order p (trivial group counts).
bool is_elementary_abelian(const PermutationGroup& g);

// Sylow p-subgroup; trivial if p does not divide |g|.
PermutationGroup sylow(const PermutationGroup& g, std::uint64_t p, const Bounds& bounds = {});

// A Sylow p-subgroup of n normalized by every generator of a, searched among
// the n-conjugates of sylow(n, p); nullopt if none is.
std::optional<PermutationGroup> invariant_sylow(const PermutationGroup& n, const PermutationGroup& a,
                                                std::uint64_t p, const Bounds& bounds = {});

// A Hall pi-subgroup or nullopt if exhaustive search proves none exists.
// Throws BoundExceeded when absence cannot be certified under the bounds.
std::optional<PermutationGroup> hall(const PermutationGroup& g, const PrimeSet& pi,
                                     const Bounds& bounds = {});

// gcd(|h|, |k : h|) == 1. Precondition h <= k.
bool is_hall_in(const PermutationGroup& h, const PermutationGroup& k);

// Some t in g with h1^t = h2, or nullopt.
std::optional<Permutation> are_conjugate_subgroups(const PermutationGroup& g,
                                                   const PermutationGroup& h1,
                                                   const PermutationGroup& h2,
                                                   const Bounds& bounds = {});

// Some t in g with x^t = y, or nullopt.
std::optional<Permutation> are_conjugate_elements(const PermutationGroup& g, const Permutation& x,
                                                  const Permutation& y, const Bounds& bounds = {});

// |A B| = |A| |B| / |A cap B| for the product set.
std::uint64_t product_set_size(const PermutationGroup& a, const PermutationGroup& b,
                               const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_GROUPLAT_SUBGROUP_H_
