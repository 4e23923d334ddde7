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

#include "tigroup/tiprops/ti.h"

#include <algorithm>
#include <iterator>

#include "tigroup/grouplat/orbit.h"
#include "tigroup/grouplat/subgroup.h"
#include "tigroup/permcore/errors.h"

namespace tig {

TIWitness is_ti(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds) {
  if (!g.contains(h)) throw InvalidInput("is_ti: subgroup is not contained in the group");
  TIWitness w;
  if (h.is_trivial() || normalizes(g, h)) return w;
  KeyedOrbit orbit = subgroup_conjugation_orbit(g, h, bounds);
  const auto own = decode_ranks(orbit.key(0));
  const auto& chain = g.chain();
  for (std::size_t i = 1; i < orbit.size(); ++i) {
    const auto other = decode_ranks(orbit.key(i));
    std::vector<std::uint64_t> meet;
    std::set_intersection(own.begin(), own.end(), other.begin(), other.end(), std::back_inserter(meet));
    if (meet.size() <= 1) continue;
    std::vector<Permutation> elems;
    for (auto r : meet) elems.push_back(chain.unrank(r));
    w.ti = false;
    w.conjugator = orbit.transversal(i);
    w.intersection = generate_greedy(g.degree(), elems);
    return w;
  }
  return w;
}

}  // namespace tig
