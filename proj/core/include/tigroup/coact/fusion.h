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

#ifndef TIGROUP_COACT_FUSION_H_
#define TIGROUP_COACT_FUSION_H_

#include <cstdint>
#include <optional>

#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"
#include "tigroup/tiprops/report.h"

namespace tig {

struct FusionResult {
  bool controls = true;
  // x, y in H conjugate in G by t but not conjugate in K.
  std::optional<Permutation> x;
  std::optional<Permutation> y;
  std::optional<Permutation> t;
  // Some two distinct elements of H are conjugate in G.
  bool fused = false;
};

// K controls G-fusion in H: elements of H conjugate in G are conjugate in K.
// Requires H <= K <= G.
FusionResult controls_fusion(const PermutationGroup& k, const PermutationGroup& h, const PermutationGroup& g,
                             const Bounds& bounds = {});

// A normal subgroup of order |G|_{p'}, or nullopt.
std::optional<PermutationGroup> normal_p_complement(const PermutationGroup& g, std::uint64_t p,
                                                    const Bounds& bounds = {});

// For P Sylow in G: P central in N_G(P) implies a normal p-complement; P
// cyclic with p the least prime of |G| implies one; and one exists exactly
// when P controls G-fusion in P.
TheoremReport check_normal_p_complement(const PermutationGroup& g, std::uint64_t p, const Bounds& bounds = {});

// For H Hall in G controlling G-fusion in itself, with every pi-subgroup
// conjugate into H (pi the primes of |H|): H has a normal complement.
TheoremReport check_fusion_complement(const PermutationGroup& g, const PermutationGroup& h,
                                      const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_COACT_FUSION_H_
