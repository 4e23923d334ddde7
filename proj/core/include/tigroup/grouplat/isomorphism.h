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

#ifndef TIGROUP_GROUPLAT_ISOMORPHISM_H_
#define TIGROUP_GROUPLAT_ISOMORPHISM_H_

#include <optional>
#include <vector>

#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"

namespace tig {

// Images of a's table generators under an isomorphism a -> b, as elements of
// b, or nullopt. Backtracks over generator images with matching element
// orders; the first image is taken up to conjugacy in b. Throws
// BoundExceeded when either order exceeds bounds.isomorphism.
std::optional<std::vector<Permutation>> find_isomorphism(const PermutationGroup& a, const PermutationGroup& b,
                                                         const Bounds& bounds = {});
bool isomorphic(const PermutationGroup& a, const PermutationGroup& b, const Bounds& bounds = {});

// Some section K/L of g (K <= g, L normal in K) is isomorphic to t.
// Throws BoundExceeded when |g| > bounds.subgroups.
bool involves(const PermutationGroup& g, const PermutationGroup& t, const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_GROUPLAT_ISOMORPHISM_H_
