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

#ifndef TIGROUP_CORPUS_CATALOG_H_
#define TIGROUP_CORPUS_CATALOG_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "tigroup/corpus/spec.h"
#include "tigroup/permcore/perm_group.h"

namespace tig {

// A named group with distinguished subgroups. Conventional labels: H for a
// T.I. or Frobenius complement subgroup, N and A for a coprime action of A
// on the normal subgroup N.
class CatalogEntry {
 public:
  explicit CatalogEntry(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  bool has_tag(std::string_view tag) const { return spec_.has_tag(tag); }
  bool has_subgroup(std::string_view label) const;
  std::optional<std::uint64_t> expected(std::string_view key) const;

  // Built on first use and shared afterwards.
  const PermutationGroup& group() const;
  PermutationGroup subgroup(std::string_view label) const;

 private:
  struct Lazy;
  GroupSpec spec_;
  std::shared_ptr<Lazy> lazy_;
};

// Every shipped entry in a fixed order; names are unique.
const std::vector<CatalogEntry>& catalog();
// nullptr when absent.
const CatalogEntry* find_entry(std::string_view name);

}  // namespace tig

#endif  // TIGROUP_CORPUS_CATALOG_H_
