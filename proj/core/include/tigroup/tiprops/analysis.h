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

#ifndef TIGROUP_TIPROPS_ANALYSIS_H_
#define TIGROUP_TIPROPS_ANALYSIS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tigroup/grouplat/primes.h"
#include "tigroup/grouplat/section.h"
#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"
#include "tigroup/tiprops/report.h"

namespace tig {

// Hypotheses shared by the nonnormal Hall T.I. checkers, with pi the primes
// dividing |H|: H proper and nontrivial, H not normal, H T.I., H Hall in
// N_G(H), and G pi-separable.
struct TIHallContext {
  PrimeSet pi;
  std::vector<Clause> hypotheses;
  // Name of the first failed hypothesis, empty when all hold.
  std::string failed;
  PermutationGroup normalizer;
  // O = largest normal pi'-subgroup of G.
  PermutationGroup o_pi_prime;
  std::optional<std::uint64_t> pi_length;

  bool applicable() const { return failed.empty(); }
};

TIHallContext ti_hall_context(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds = {});

struct ChiefFactorAction {
  Section factor;
  // Largest number of cosets fixed by a prime-order element of H (the
  // trivial coset included); 1 means the action is Frobenius.
  std::uint64_t max_fixed = 1;
};

struct TIHallAnalysis {
  TIHallContext context;
  // |O N_G(H)| == |G|, evaluated whenever H is proper and nontrivial.
  std::optional<bool> factorization;
  PermutationGroup l_subgroup;  // [O, H]
  std::optional<PermutationGroup> complement;
  std::optional<Section> frobenius_section;
  std::optional<Section> chief_frobenius_factor;
  std::vector<ChiefFactorAction> chief_factors;
  std::map<std::string, bool> solvability;
  TheoremReport report;
};

// Verifies, when the hypotheses hold: pi-length 1 and G = O N_G(H); a section
// of O with Frobenius H-action; when O is solvable, a chief factor of G
// between [O, H]' and [O, H] with Frobenius H-action; and that G is solvable
// exactly when O is solvable and H involves no SL(2, 5).
TIHallAnalysis analyze_ti_hall(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds = {});

struct TIHallDecomposition {
  PermutationGroup o;
  PermutationGroup h;
  PermutationGroup q;
  TheoremReport report;
};

// G = O H Q with Q a complement of H in N_G(H), found as a Hall
// pi'-subgroup of N_G(H). NOT_APPLICABLE unless ti_hall_context holds.
TIHallDecomposition decompose_ti_hall(const PermutationGroup& g, const PermutationGroup& h,
                                      const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_TIPROPS_ANALYSIS_H_
