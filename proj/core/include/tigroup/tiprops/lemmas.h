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

#ifndef TIGROUP_TIPROPS_LEMMAS_H_
#define TIGROUP_TIPROPS_LEMMAS_H_

#include <cstdint>

#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"
#include "tigroup/tiprops/report.h"

namespace tig {

// For H T.I. in G: H is Hall in G exactly when H is Hall in N_G(H).
TheoremReport check_hall_via_normalizer(const PermutationGroup& g, const PermutationGroup& h,
                                        const Bounds& bounds = {});

// For H a T.I. Hall pi-subgroup (pi the primes of |H|): every pi-subgroup of
// G is conjugate into H, and the Hall pi-subgroups form one conjugacy class.
// Every subgroup class is examined, so the lattice bound applies.
TheoremReport check_hall_ti_conjugacy(const PermutationGroup& g, const PermutationGroup& h,
                                      const Bounds& bounds = {});

// For N normal in G complemented by a T.I. subgroup H of coprime order: N has
// an H-invariant Sylow p-subgroup.
TheoremReport check_invariant_sylow(const PermutationGroup& g, const PermutationGroup& n, const PermutationGroup& h,
                                    std::uint64_t p, const Bounds& bounds = {});

// For N normal in G and H T.I. of order coprime to |N|: in G/N the normalizer
// of the image of H is the image of N_G(H).
TheoremReport check_quotient_normalizer(const PermutationGroup& g, const PermutationGroup& n,
                                        const PermutationGroup& h, const Bounds& bounds = {});

// Same hypotheses: the image of H in G/N is T.I.
TheoremReport check_ti_image(const PermutationGroup& g, const PermutationGroup& n, const PermutationGroup& h,
                             const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_TIPROPS_LEMMAS_H_
