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

#ifndef TIGROUP_TIPROPS_PI_SERIES_H_
#define TIGROUP_TIPROPS_PI_SERIES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "tigroup/grouplat/primes.h"
#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/perm_group.h"

namespace tig {

// Largest normal pi-subgroup of g.
PermutationGroup pi_core(const PermutationGroup& g, const PrimeSet& pi, const Bounds& bounds = {});

// Largest normal subgroup M of g containing `below` (itself normal) with
// |M : below| a pi-number.
PermutationGroup pi_core_over(const PermutationGroup& g, const PermutationGroup& below, const PrimeSet& pi,
                              const Bounds& bounds = {});

struct PiSeries {
  // 1 = P_0 <= P_1 <= ... alternating pi' and pi steps; repeated terms are
  // dropped.
  std::vector<PermutationGroup> terms;
  bool separable = false;
  // Number of pi-steps that grew the series, when separable.
  std::optional<std::uint64_t> pi_length;
};

// Upper pi-series of g. The series stalls (and g is not pi-separable) when
// neither a pi'-step nor a pi-step can grow the current term.
PiSeries pi_series(const PermutationGroup& g, const PrimeSet& pi, const Bounds& bounds = {});

}  // namespace tig

#endif  // TIGROUP_TIPROPS_PI_SERIES_H_
