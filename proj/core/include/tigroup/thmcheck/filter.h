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

#ifndef TIGROUP_THMCHECK_FILTER_H_
#define TIGROUP_THMCHECK_FILTER_H_

#include <memory>
#include <string>
#include <string_view>

#include "tigroup/corpus/spec.h"

namespace tig {

// Boolean expression over catalog tags:
//   expr   := term ("or" term)*
//   term   := factor ("and" factor)*
//   factor := "not" factor | "(" expr ")" | tag | "name:" name
// The empty expression matches everything.
class TagFilter {
 public:
  TagFilter();
  // Throws InvalidInput on a syntax error.
  static TagFilter parse(std::string_view text);

  bool matches(const GroupSpec& spec) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace tig

#endif  // TIGROUP_THMCHECK_FILTER_H_
