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

#ifndef TIGROUP_PERMCORE_BOUNDS_H_
#define TIGROUP_PERMCORE_BOUNDS_H_

#include <cstdint>

namespace tig {

// Limits for the brute-force tiers. Every operation that may enumerate takes
// a Bounds and throws BoundExceeded instead of running away.
struct Bounds {
  // Maximum number of group elements any single enumeration may visit.
  std::uint64_t enumeration = 1'000'000;
  // Maximum group order for subgroup-lattice work (classes of subgroups,
  // Hall fallback, involvement).
  std::uint64_t subgroups = 2000;
  // Maximum group order for isomorphism testing.
  std::uint64_t isomorphism = 1000;
};

}  // namespace tig

#endif  // TIGROUP_PERMCORE_BOUNDS_H_
