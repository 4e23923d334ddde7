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

#ifndef TIGROUP_TIPROPS_TI_H_
#define TIGROUP_TIPROPS_TI_H_

#include <optional>

#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"

namespace tig {

// Result of a trivial-intersection test. When `ti` is false, H^conjugator
// differs from H and meets it in `intersection`, which is neither 1 nor H.
struct TIWitness {
  bool ti = true;
  std::optional<Permutation> conjugator;
  std::optional<PermutationGroup> intersection;
};

// Walks the conjugates of H through a transversal of N_G(H), comparing the
// sorted chain ranks of their elements with those of H. Throws InvalidInput
// if H is not contained in G and BoundExceeded if there are more conjugates
// than bounds.enumeration.
TIWitness is_ti(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_TIPROPS_TI_H_
