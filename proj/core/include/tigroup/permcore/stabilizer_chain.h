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

#ifndef TIGROUP_PERMCORE_STABILIZER_CHAIN_H_
#define TIGROUP_PERMCORE_STABILIZER_CHAIN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tigroup/permcore/permutation.h"

namespace tig {

// Base and strong generating set computed by deterministic Schreier-Sims.
//
// The base is always the increasing sequence of "smallest point moved by the
// current stabilizer": level k stabilizes base[0..k-1], and every point
// strictly between base[k-1] and base[k] is fixed by that stabilizer. As a
// consequence, ordering elements by their base images is the same as ordering
// them lexicographically by their full image arrays.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    // Orbit of `base` under the level's stabilizer, in discovery order.
    std::vector<Point> orbit;
    // orbit_position[p] is the index of p in `orbit`, or -1.
    std::vector<std::int32_t> orbit_position;
    // transversal[i] maps base to orbit[i]; inverse_transversal[i] is its inverse.
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
  };

  StabilizerChain() = default;

  static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<Permutation>& strong_generators() const { return strong_generators_; }
  std::vector<Point> base() const;

  // Product of orbit lengths. Throws InvalidInput if it does not fit 64 bits.
  std::uint64_t order() const { return order_; }

  bool contains(const Permutation& g) const;

  // Position of g in the mixed-radix numbering given by orbit positions;
  // nullopt when g is not a member. Ranks are a bijection onto [0, order()).
  std::optional<std::uint64_t> rank(const Permutation& g) const;
  Permutation unrank(std::uint64_t rank) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_generators_;
  std::uint64_t order_ = 1;
};

}  // namespace tig

#endif  // TIGROUP_PERMCORE_STABILIZER_CHAIN_H_
