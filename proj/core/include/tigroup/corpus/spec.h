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

#ifndef TIGROUP_CORPUS_SPEC_H_
#define TIGROUP_CORPUS_SPEC_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tigroup/permcore/perm_group.h"

namespace tig {

inline constexpr std::string_view kSpecFormat = "tigroup-groupspec/1";

// A permutation group as text: generators in cycle notation, tags, named
// subgroups given by generators, and expected integer facts. Order of
// subgroups and facts is preserved.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::vector<std::string> tags;
  std::vector<std::pair<std::string, std::vector<std::string>>> subgroups;
  std::vector<std::pair<std::string, std::uint64_t>> expected;

  bool has_tag(std::string_view tag) const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Canonical text; parse_spec(format_spec(s)) == s.
std::string format_spec(const GroupSpec& spec);
// Strict parser; throws ParseError with the 1-based line and column.
GroupSpec parse_spec(std::string_view text);

GroupSpec load_spec(const std::filesystem::path& path);
void save_spec(const std::filesystem::path& path, const GroupSpec& spec);

// Cycle-notation generator list, as used in subgroup lines.
std::string format_generators(const std::vector<Permutation>& gens);
// Inverse of format_generators; throws InvalidInput on a malformed cycle.
std::vector<Permutation> parse_generator_list(std::string_view text, std::size_t degree);

// Throws InvalidInput if a generator does not parse.
PermutationGroup build_group(const GroupSpec& spec);
// Throws InvalidInput for an unknown label or a subgroup outside the group.
PermutationGroup build_subgroup(const GroupSpec& spec, std::string_view label);

}  // namespace tig

#endif  // TIGROUP_CORPUS_SPEC_H_
