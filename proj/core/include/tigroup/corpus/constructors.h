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

#ifndef TIGROUP_CORPUS_CONSTRUCTORS_H_
#define TIGROUP_CORPUS_CONSTRUCTORS_H_

#include <cstdint>
#include <vector>

#include "tigroup/permcore/perm_group.h"

namespace tig {

// All constructors throw InvalidInput on parameters outside their range.

// <(0 1 ... n-1)>, n >= 1.
PermutationGroup cyclic(std::size_t n);
// Symmetries of the n-gon, order 2n, n >= 3.
PermutationGroup dihedral(std::size_t n);
// Q_{2^k} (order = 2^k >= 8) in its right regular action.
PermutationGroup generalized_quaternion(std::size_t order);
PermutationGroup symmetric(std::size_t n);
PermutationGroup alternating(std::size_t n);

// x -> a x + b over GF(q) with a in the subgroup of order d of GF(q)*, on q
// points numbered as field elements. d must divide q - 1.
PermutationGroup affine_group(std::uint32_t q, std::uint32_t d);
// AGL(1, q) for prime q.
PermutationGroup agl1(std::uint32_t q);

// SL(2, q). For even q it acts on the projective line, infinity first and
// then the field elements in additive order (q + 1 points); for odd q it acts
// on the nonzero vectors (a, b) of GF(q)^2, numbered a q + b - 1, since -I
// acts trivially on the projective line.
PermutationGroup sl2(std::uint32_t q);
// PSL(2, q) on the projective line.
PermutationGroup psl2(std::uint32_t q);
// The field automorphism z -> z^(p^(k/f)) of order f on the domain of
// sl2(q), as a permutation. f must divide k where q = p^k.
Permutation field_automorphism(std::uint32_t q, std::uint32_t f);
// SL(2, q) extended by field_automorphism(q, f).
PermutationGroup field_aut_extension(std::uint32_t q, std::uint32_t f);

// G1 x G2 on the disjoint union of the domains, G2's points shifted by
// deg(G1).
PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b);
// Embeds x into degree `degree` fixing the new points, or shifted by
// `offset`.
Permutation extend(const Permutation& x, std::size_t degree, std::size_t offset = 0);

// <G, normalizers>; every extra permutation must normalize G.
PermutationGroup semidirect_by_normalizing_perms(const PermutationGroup& g,
                                                 const std::vector<Permutation>& normalizers);

}  // namespace tig

#endif  // TIGROUP_CORPUS_CONSTRUCTORS_H_
