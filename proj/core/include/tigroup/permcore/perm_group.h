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

#ifndef TIGROUP_PERMCORE_PERM_GROUP_H_
#define TIGROUP_PERMCORE_PERM_GROUP_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tigroup/permcore/bounds.h"
#include "tigroup/permcore/permutation.h"
#include "tigroup/permcore/stabilizer_chain.h"

namespace tig {

// A permutation group given by generators. The stabilizer chain and any
// derived data (conjugacy classes, subgroup lattice) are computed on first
// use and shared between copies. Publication is first-writer-wins under a
// mutex; concurrent callers may compute twice but observe one result.
class PermutationGroup {
 public:
  PermutationGroup() : PermutationGroup(0, {}) {}
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermutationGroup trivial(std::size_t degree) { return PermutationGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabilizerChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool is_trivial() const { return generators_.empty(); }

  // Throws InvalidInput on degree mismatch.
  bool contains(const Permutation& x) const;
  // Every generator of `sub` is a member.
  bool contains(const PermutationGroup& sub) const;

  // Returns the cached value for `key`, computing it with `make` on a miss.
  template <typename T>
  std::shared_ptr<const T> cached(const std::string& key,
                                  const std::function<std::shared_ptr<const T>()>& make) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->extras.find(key);
      if (it != cache_->extras.end()) return std::static_pointer_cast<const T>(it->second);
    }
    std::shared_ptr<const T> value = make();
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, inserted] = cache_->extras.emplace(key, value);
    return std::static_pointer_cast<const T>(it->second);
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const StabilizerChain> chain;
    std::map<std::string, std::shared_ptr<const void>> extras;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

// Same elements (equal order and mutual containment of generators).
bool same_group(const PermutationGroup& a, const PermutationGroup& b);

std::uint64_t group_order(const PermutationGroup& g);
bool contains(const PermutationGroup& g, const Permutation& x);

// Visits every element in increasing lexicographic order of image arrays
// (equivalently of base images). Stops early when `visit` returns false.
// Throws BoundExceeded if the order exceeds bounds.enumeration.
void for_each_element(const PermutationGroup& g, const std::function<bool(const Permutation&)>& visit,
                      const Bounds& bounds = {});

std::vector<Permutation> elements(const PermutationGroup& g, const Bounds& bounds = {});

// Throws BoundExceeded when the group is larger than `limit`.
void require_order_at_most(const PermutationGroup& g, std::uint64_t limit, const char* what);

}  // namespace tig

#endif  // TIGROUP_PERMCORE_PERM_GROUP_H_
