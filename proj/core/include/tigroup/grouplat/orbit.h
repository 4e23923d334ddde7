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

#ifndef TIGROUP_GROUPLAT_ORBIT_H_
#define TIGROUP_GROUPLAT_ORBIT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tigroup/permcore/perm_group.h"

namespace tig {

// Orbit of an object under a group, with the objects encoded as byte-string
// keys. Stores a BFS tree (parent, generator) instead of transversal
// elements so that large orbits stay compact.
class KeyedOrbit {
 public:
  using Action = std::function<std::string(const std::string& key, const Permutation& g)>;

  // Throws BoundExceeded if the orbit grows past `limit` points.
  KeyedOrbit(const PermutationGroup& group, std::string start, const Action& act,
             std::uint64_t limit);

  std::size_t size() const { return keys_.size(); }
  const std::string& key(std::size_t i) const { return keys_[i]; }
  std::optional<std::size_t> find(const std::string& key) const;

  // An element t with start^t = key(i).
  Permutation transversal(std::size_t i) const;

  // Stabilizer of the start point, built from Schreier generators until its
  // order reaches |group| / size().
  PermutationGroup stabilizer() const;

 private:
  PermutationGroup group_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> via_;
  // edges_[i * ngens + s] = index of key(i) moved by generator s.
  std::vector<std::int32_t> edges_;
};

// Byte encoding helpers used as orbit keys.
std::string encode_ranks(const std::vector<std::uint64_t>& ranks);
std::vector<std::uint64_t> decode_ranks(const std::string& key);

}  // namespace tig

#endif  // TIGROUP_GROUPLAT_ORBIT_H_
