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

#include "tigroup/corpus/spec.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tigroup/permcore/errors.h"

namespace tig {

namespace {

bool is_word(std::string_view s, std::string_view extra) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || extra.find(c) != std::string_view::npos;
  });
}

std::vector<std::string> split_generators(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(start, comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    out.emplace_back(part);
    start = comma + 1;
  }
  return out;
}

std::string join_generators(const std::vector<std::string>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i];
  }
  return out;
}

}  // namespace

std::vector<Permutation> parse_generator_list(std::string_view text, std::size_t degree) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_permutation(text.substr(start, comma - start), degree));
    start = comma + 1;
  }
  return out;
}

bool GroupSpec::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::string format_generators(const std::vector<Permutation>& gens) {
  std::vector<std::string> parts;
  for (const auto& g : gens) parts.push_back(to_cycle_string(g));
  if (parts.empty()) parts.emplace_back("()");
  return join_generators(parts);
}

std::string format_spec(const GroupSpec& spec) {
  std::ostringstream out;
  out << "format = " << kSpecFormat << '\n';
  out << "name = " << spec.name << '\n';
  out << "degree = " << spec.degree << '\n';
  for (const auto& g : spec.generators) out << "generator = " << g << '\n';
  for (const auto& t : spec.tags) out << "tag = " << t << '\n';
  for (const auto& [label, gens] : spec.subgroups) out << "subgroup " << label << " = " << join_generators(gens) << '\n';
  for (const auto& [key, value] : spec.expected) out << "expect " << key << " = " << value << '\n';
  return out.str();
}

GroupSpec parse_spec(std::string_view text) {
  GroupSpec spec;
  bool seen_format = false;
  bool seen_name = false;
  bool seen_degree = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(' ');
    if (first == std::string_view::npos || line[first] == '#') continue;
    auto fail = [&](const std::string& what, std::size_t column) -> ParseError {
      return ParseError(what, line_no, column + 1);
    };

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw fail("expected 'key = value'", first);
    std::string_view lhs = line.substr(first, eq - first);
    while (!lhs.empty() && lhs.back() == ' ') lhs.remove_suffix(1);
    std::size_t value_col = line.find_first_not_of(' ', eq + 1);
    if (value_col == std::string_view::npos) value_col = line.size();
    std::string_view value = line.substr(value_col);
    while (!value.empty() && value.back() == ' ') value.remove_suffix(1);

    std::string_view key = lhs;
    std::string_view label;
    std::size_t label_col = 0;
    if (std::size_t space = lhs.find(' '); space != std::string_view::npos) {
      key = lhs.substr(0, space);
      label_col = lhs.find_first_not_of(' ', space);
      label = lhs.substr(label_col);
      label_col += first;
    }
    const bool labeled = key == "subgroup" || key == "expect";
    if (labeled && label.empty()) throw fail("missing label after '" + std::string(key) + "'", first + key.size());
    if (!labeled && !label.empty()) throw fail("unexpected label", label_col);

    if (!seen_format) {
      if (key != "format") throw fail("first entry must be 'format'", first);
      if (value != kSpecFormat) throw fail("unsupported format '" + std::string(value) + "'", value_col);
      seen_format = true;
      continue;
    }
    if (key == "format") throw fail("duplicate 'format'", first);
    if (key == "name") {
      if (seen_name) throw fail("duplicate 'name'", first);
      if (!is_word(value, "_-")) throw fail("invalid name", value_col);
      spec.name = std::string(value);
      seen_name = true;
    } else if (key == "degree") {
      if (seen_degree) throw fail("duplicate 'degree'", first);
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(c); }) ||
          value.size() > 9 || value == "0") {
        throw fail("degree must be a positive integer", value_col);
      }
      spec.degree = std::stoul(std::string(value));
      seen_degree = true;
    } else if (key == "generator" || key == "subgroup") {
      if (!seen_degree) throw fail("'degree' must precede generators", first);
      try {
        parse_generator_list(value, spec.degree);
      } catch (const InvalidInput& e) {
        throw fail(std::string("malformed permutation: ") + e.what(), value_col);
      }
      if (key == "generator") {
        if (value.find(',') != std::string_view::npos) throw fail("one permutation per generator line", value_col);
        spec.generators.emplace_back(value);
      } else {
        if (!is_word(label, "_")) throw fail("invalid subgroup label", label_col);
        for (const auto& [l, g] : spec.subgroups) {
          if (l == label) throw fail("duplicate subgroup '" + std::string(label) + "'", label_col);
        }
        spec.subgroups.emplace_back(std::string(label), split_generators(value));
      }
    } else if (key == "tag") {
      if (!is_word(value, "_-")) throw fail("invalid tag", value_col);
      spec.tags.emplace_back(value);
    } else if (key == "expect") {
      if (!is_word(label, "_.")) throw fail("invalid fact name", label_col);
      if (value.empty() || value.size() > 19 ||
          !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(c); })) {
        throw fail("expected value must be a non-negative integer", value_col);
      }
      spec.expected.emplace_back(std::string(label), std::stoull(std::string(value)));
    } else {
      throw fail("unknown field '" + std::string(key) + "'", first);
    }
  }
  if (!seen_format) throw ParseError("missing 'format'", line_no + 1, 1);
  if (!seen_name) throw ParseError("missing 'name'", line_no + 1, 1);
  if (!seen_degree) throw ParseError("missing 'degree'", line_no + 1, 1);
  return spec;
}

GroupSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

void save_spec(const std::filesystem::path& path, const GroupSpec& spec) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << format_spec(spec);
}

PermutationGroup build_group(const GroupSpec& spec) {
  std::vector<Permutation> gens;
  for (const auto& g : spec.generators) gens.push_back(parse_permutation(g, spec.degree));
  return PermutationGroup(spec.degree, std::move(gens));
}

PermutationGroup build_subgroup(const GroupSpec& spec, std::string_view label) {
  for (const auto& [l, gens] : spec.subgroups) {
    if (l != label) continue;
    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(parse_permutation(g, spec.degree));
    PermutationGroup h(spec.degree, std::move(perms));
    if (!build_group(spec).contains(h)) {
      throw InvalidInput("subgroup '" + std::string(label) + "' of " + spec.name + " is not contained in the group");
    }
    return h;
  }
  throw InvalidInput(spec.name + " has no subgroup '" + std::string(label) + "'");
}

}  // namespace tig
