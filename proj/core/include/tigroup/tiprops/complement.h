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

#ifndef TIGROUP_TIPROPS_COMPLEMENT_H_
#define TIGROUP_TIPROPS_COMPLEMENT_H_

#include <optional>

#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"
#include "tigroup/tiprops/report.h"

namespace tig {

// A normal subgroup N of g with N cap h = 1 and N h = g, the least one in
// subgroup order; nullopt after a sweep of all normal subgroups.
std::optional<PermutationGroup> normal_complement(const PermutationGroup& g, const PermutationGroup& h,
                                                  const Bounds& bounds = {});

// For H T.I. and Hall in N_G(H): H has a normal complement in N_G(H) exactly
// when it has one in G. When H is nonnormal and complemented, also builds a
// group in which H is a Frobenius complement.
TheoremReport check_normal_complement_transfer(const PermutationGroup& g, const PermutationGroup& h,
                                               const Bounds& bounds = {});

// Under the T.I. Hall hypotheses with an abelian Sylow 2-subgroup of H:
// C_H(Q) is a Hall subgroup of G and O [H, Q] Q is a normal complement to it.
TheoremReport check_centralizer_complement(const PermutationGroup& g, const PermutationGroup& h,
                                           const Bounds& bounds = {});

// Under the T.I. Hall hypotheses with |H| odd, [O, H] = O, O solvable and
// Q not inside O': in G/O' the images give (O x| H) x| Q with Q abelian and
// faithful on H, and O [H, b] <b> is double Frobenius for every b in Q of
// prime order.
TheoremReport check_double_frobenius(const PermutationGroup& g, const PermutationGroup& h,
                                     const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_TIPROPS_COMPLEMENT_H_
