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

#include "tigroup/tiprops/pi_series.h"

#include "tigroup/grouplat/lattice.h"

namespace tig {

PermutationGroup pi_core_over(const PermutationGroup& g, const PermutationGroup& below, const PrimeSet& pi,
                              const Bounds& bounds) {
  PermutationGroup best = below;
  for (const auto& n : *normal_subgroups(g, bounds)) {
    if (n.order() <= best.order() || n.order() % below.order() != 0) continue;
    if (!pi.is_pi_number(n.order() / below.order()) || !n.contains(below)) continue;
    best = n;
  }
  return best;
}

PermutationGroup pi_core(const PermutationGroup& g, const PrimeSet& pi, const Bounds& bounds) {
  return pi_core_over(g, PermutationGroup::trivial(g.degree()), pi, bounds);
}

PiSeries pi_series(const PermutationGroup& g, const PrimeSet& pi, const Bounds& bounds) {
  const PrimeSet co_pi = pi.complement_in(g.order());
  PiSeries out;
  out.terms.push_back(PermutationGroup::trivial(g.degree()));
  std::uint64_t length = 0;
  while (out.terms.back().order() != g.order()) {
    PermutationGroup current = out.terms.back();
    PermutationGroup a = pi_core_over(g, current, co_pi, bounds);
    if (a.order() > current.order()) out.terms.push_back(a);
    PermutationGroup b = pi_core_over(g, a, pi, bounds);
    if (b.order() > a.order()) {
      out.terms.push_back(b);
      ++length;
    }
    if (b.order() == current.order()) return out;
  }
  out.separable = true;
  out.pi_length = length;
  return out;
}

}  // namespace tig
