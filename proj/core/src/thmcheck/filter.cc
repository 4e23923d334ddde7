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

#include "tigroup/thmcheck/filter.h"

#include <cctype>
#include <vector>

#include "tigroup/permcore/errors.h"

namespace tig {

struct TagFilter::Node {
  enum class Kind { kTrue, kTag, kName, kNot, kAnd, kOr } kind = Kind::kTrue;
  std::string value;
  std::vector<std::shared_ptr<const Node>> children;
};

namespace {

using NodePtr = std::shared_ptr<const TagFilter::Node>;
using Kind = TagFilter::Node::Kind;

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '(' || c == ')') {
        tokens_.emplace_back(1, c);
        ++i;
      } else {
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(' &&
               text[j] != ')') {
          ++j;
        }
        tokens_.emplace_back(text.substr(i, j - i));
        i = j;
      }
    }
  }

  NodePtr parse() {
    if (tokens_.empty()) return std::make_shared<TagFilter::Node>();
    NodePtr n = expr();
    if (pos_ != tokens_.size()) throw InvalidInput("filter: unexpected '" + tokens_[pos_] + "'");
    return n;
  }

 private:
  bool accept(std::string_view t) {
    if (pos_ < tokens_.size() && tokens_[pos_] == t) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr binary(Kind kind, std::string_view op, NodePtr (Parser::*next)()) {
    NodePtr first = (this->*next)();
    if (pos_ >= tokens_.size() || tokens_[pos_] != op) return first;
    auto node = std::make_shared<TagFilter::Node>();
    node->kind = kind;
    node->children.push_back(first);
    while (accept(op)) node->children.push_back((this->*next)());
    return node;
  }

  NodePtr expr() { return binary(Kind::kOr, "or", &Parser::term); }
  NodePtr term() { return binary(Kind::kAnd, "and", &Parser::factor); }

  NodePtr factor() {
    if (pos_ >= tokens_.size()) throw InvalidInput("filter: unexpected end of expression");
    if (accept("not")) {
      auto node = std::make_shared<TagFilter::Node>();
      node->kind = Kind::kNot;
      node->children.push_back(factor());
      return node;
    }
    if (accept("(")) {
      NodePtr inner = expr();
      if (!accept(")")) throw InvalidInput("filter: missing ')'");
      return inner;
    }
    const std::string& t = tokens_[pos_];
    if (t == ")" || t == "and" || t == "or") throw InvalidInput("filter: unexpected '" + t + "'");
    ++pos_;
    auto node = std::make_shared<TagFilter::Node>();
    if (t.rfind("name:", 0) == 0) {
      node->kind = Kind::kName;
      node->value = t.substr(5);
      if (node->value.empty()) throw InvalidInput("filter: empty name");
    } else {
      node->kind = Kind::kTag;
      node->value = t;
    }
    return node;
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

bool evaluate(const TagFilter::Node& n, const GroupSpec& spec) {
  switch (n.kind) {
    case Kind::kTrue:
      return true;
    case Kind::kTag:
      return spec.has_tag(n.value);
    case Kind::kName:
      return spec.name == n.value;
    case Kind::kNot:
      return !evaluate(*n.children[0], spec);
    case Kind::kAnd:
      for (const auto& c : n.children) {
        if (!evaluate(*c, spec)) return false;
      }
      return true;
    case Kind::kOr:
      for (const auto& c : n.children) {
        if (evaluate(*c, spec)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

TagFilter::TagFilter() : root_(std::make_shared<Node>()) {}

TagFilter TagFilter::parse(std::string_view text) {
  TagFilter f;
  f.text_ = std::string(text);
  f.root_ = Parser(text).parse();
  return f;
}

bool TagFilter::matches(const GroupSpec& spec) const { return evaluate(*root_, spec); }

}  // namespace tig
