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

#ifndef TIGROUP_COACT_COPRIME_H_
#define TIGROUP_COACT_COPRIME_H_

#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"
#include "tigroup/tiprops/report.h"

namespace tig {

// A acting on G by conjugation inside parent = G A, with G normal,
// G cap A = 1 and gcd(|G|, |A|) = 1.
struct CoprimeActionPair {
  PermutationGroup parent;
  PermutationGroup g_part;
  PermutationGroup a_part;
};

// Throws InvalidInput naming the first violated condition.
CoprimeActionPair make_pair(const PermutationGroup& parent, const PermutationGroup& g, const PermutationGroup& a);

// C_G(A).
PermutationGroup fixed_subgroup(const CoprimeActionPair& pair, const Bounds& bounds = {});
// [G, A].
PermutationGroup commutator_ga(const CoprimeActionPair& pair);

// The coprime action identities: G = [G,A] C_G(A) (direct when G is
// abelian); [G,A,A] = [G,A]; an A-invariant Sylow p-subgroup for each p;
// P cap C_G(A) Sylow in C_G(A) for every A-invariant Sylow P;
// C_G(A)N/N = C_{G/N}(A) for every A-invariant normal N; and elements of
// C_G(A) conjugate in G are conjugate in C_G(A).
TheoremReport check_coprime_identities(const CoprimeActionPair& pair, const Bounds& bounds = {});

// When every Sylow subgroup of G is cyclic: C_G(A) is Hall in G,
// G = [G,A] x| C_G(A), and [G,A] is cyclic.
TheoremReport check_cyclic_sylow_action(const CoprimeActionPair& pair, const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_COACT_COPRIME_H_
