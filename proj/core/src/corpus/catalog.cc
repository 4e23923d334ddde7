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

#include "tigroup/corpus/catalog.h"

#include <mutex>
#include <string>
#include <utility>

#include "tigroup/corpus/constructors.h"
#include "tigroup/permcore/errors.h"

namespace tig {

struct CatalogEntry::Lazy {
  std::once_flag once;
  std::optional<PermutationGroup> group;
};

CatalogEntry::CatalogEntry(GroupSpec spec) : spec_(std::move(spec)), lazy_(std::make_shared<Lazy>()) {}

bool CatalogEntry::has_subgroup(std::string_view label) const {
  for (const auto& s : spec_.subgroups) {
    if (s.first == label) return true;
  }
  return false;
}

std::optional<std::uint64_t> CatalogEntry::expected(std::string_view key) const {
  for (const auto& [k, v] : spec_.expected) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const PermutationGroup& CatalogEntry::group() const {
  std::call_once(lazy_->once, [&] { lazy_->group = build_group(spec_); });
  return *lazy_->group;
}

PermutationGroup CatalogEntry::subgroup(std::string_view label) const {
  for (const auto& [l, gens] : spec_.subgroups) {
    if (l != label) continue;
    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(parse_permutation(g, spec_.degree));
    PermutationGroup h(spec_.degree, std::move(perms));
    if (!group().contains(h)) throw InvalidInput(name() + ": subgroup " + l + " is not contained in the group");
    return h;
  }
  throw InvalidInput(name() + " has no subgroup '" + std::string(label) + "'");
}

namespace {

using Subgroups = std::vector<std::pair<std::string, std::vector<Permutation>>>;
using Expected = std::vector<std::pair<std::string, std::uint64_t>>;

GroupSpec make_spec(std::string name, const PermutationGroup& g, std::vector<std::string> tags,
                    const Subgroups& subgroups = {}, Expected expected = {}) {
  GroupSpec spec;
  spec.name = std::move(name);
  spec.degree = g.degree();
  for (const auto& x : g.generators()) spec.generators.push_back(to_cycle_string(x));
  if (spec.generators.empty()) spec.generators.emplace_back("()");
  spec.tags = std::move(tags);
  for (const auto& [label, gens] : subgroups) {
    std::vector<std::string> text;
    for (const auto& x : gens) text.push_back(to_cycle_string(x));
    if (text.empty()) text.emplace_back("()");
    spec.subgroups.emplace_back(label, std::move(text));
  }
  spec.expected = std::move(expected);
  return spec;
}

Permutation map_points(std::size_t n, auto f) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(f(i));
  return Permutation(std::move(images));
}

// x -> a x on the integers mod p.
Permutation scale_mod(std::uint32_t p, std::uint32_t a) {
  return map_points(p, [&](std::size_t x) { return x * a % p; });
}

// Multiplicative generator of the affine group's complement: the last
// generator when there are two.
Permutation affine_multiplier(const PermutationGroup& g) { return g.generators().back(); }

std::vector<CatalogEntry> build_catalog() {
  std::vector<GroupSpec> specs;

  // Distinguished examples.
  specs.push_back(make_spec("a5_sylow5", alternating(5), {"ti-hall", "simple"},
                            {{"H", {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}}},
                            {{"order", 60}, {"H.order", 5}, {"n_g_h", 10}}));
  for (auto [q, f, order] : {std::tuple{32U, 5U, std::uint64_t{163680}}, std::tuple{128U, 7U, std::uint64_t{14679168}}}) {
    const Permutation alpha = field_automorphism(q, f);
    const PermutationGroup n = sl2(q);
    std::vector<std::string> tags{"ti-hall", "field-automorphism"};
    if (q == 128) tags.emplace_back("stretch");
    specs.push_back(make_spec("sl2_" + std::to_string(q) + "_c" + std::to_string(f), field_aut_extension(q, f), tags,
                              {{"H", {alpha}}, {"N", n.generators()}, {"A", {alpha}}},
                              {{"order", order},
                               {"H.order", f},
                               {"n_g_h", 6 * std::uint64_t{f}},
                               {"o_pi_prime", order / f},
                               {"chief_fixed", 6}}));
  }

  // Frobenius groups with complement H.
  specs.push_back(make_spec("s3", symmetric(3), {"frobenius", "small"}, {{"H", {Permutation::from_cycles(3, {{0, 1}})}}},
                            {{"order", 6}, {"kernel.order", 3}}));
  const PermutationGroup f20 = affine_group(5, 4);
  specs.push_back(make_spec("f20", f20, {"frobenius", "small"}, {{"H", {affine_multiplier(f20)}}},
                            {{"order", 20}, {"kernel.order", 5}}));
  const PermutationGroup f21 = affine_group(7, 3);
  specs.push_back(make_spec("f21", f21, {"frobenius", "small"}, {{"H", {affine_multiplier(f21)}}},
                            {{"order", 21}, {"kernel.order", 7}}));
  const PermutationGroup f42 = agl1(7);
  specs.push_back(make_spec("f42", f42, {"frobenius", "ti-hall", "small"},
                            {{"H", {affine_multiplier(f42)}}, {"P3", {scale_mod(7, 2)}}},
                            {{"order", 42}, {"kernel.order", 7}, {"P3.o_pi_prime", 14}, {"P3.chief_order", 7}}));
  const PermutationGroup agl11 = agl1(11);
  specs.push_back(make_spec("agl1_11", agl11, {"frobenius"}, {{"H", {affine_multiplier(agl11)}}},
                            {{"order", 110}, {"kernel.order", 11}}));
  const PermutationGroup agl13 = agl1(13);
  specs.push_back(make_spec("agl1_13", agl13, {"frobenius"}, {{"H", {affine_multiplier(agl13)}}},
                            {{"order", 156}, {"kernel.order", 13}}));
  const PermutationGroup c2cube = affine_group(8, 7);
  specs.push_back(make_spec("c2cube_c7", c2cube, {"frobenius", "small"}, {{"H", {affine_multiplier(c2cube)}}},
                            {{"order", 56}, {"kernel.order", 8}}));
  const PermutationGroup a4 = affine_group(4, 3);
  specs.push_back(make_spec("a4", a4, {"frobenius", "small"}, {{"H", {affine_multiplier(a4)}}},
                            {{"order", 12}, {"kernel.order", 4}}));
  for (auto [name, q, d] : {std::tuple{"c3sq_c2", 9U, 2U}, std::tuple{"c3sq_c4", 9U, 4U}, std::tuple{"f39", 13U, 3U},
                            std::tuple{"f52", 13U, 4U}, std::tuple{"f55", 11U, 5U}, std::tuple{"c2e4_c3", 16U, 3U},
                            std::tuple{"c5sq_c2", 25U, 2U}, std::tuple{"c3e3_c2", 27U, 2U}, std::tuple{"f57", 19U, 3U}}) {
    const PermutationGroup g = affine_group(q, d);
    specs.push_back(make_spec(name, g, {"frobenius", "small"}, {{"H", {affine_multiplier(g)}}},
                              {{"order", std::uint64_t{q} * d}, {"kernel.order", q}}));
  }

  // Double Frobenius quotient structure over a T.I. Sylow subgroup H.
  specs.push_back(make_spec("s4", symmetric(4), {"double-frobenius", "ti-hall", "small"},
                            {{"H", {Permutation::from_cycles(4, {{0, 1, 2}})}}}, {{"order", 24}}));
  const PermutationGroup f42_semidirect = semidirect_by_normalizing_perms(f21, {scale_mod(7, 6)});
  specs.push_back(make_spec("dfrob_42", f42_semidirect, {"double-frobenius", "ti-hall", "small"},
                            {{"H", {scale_mod(7, 2)}}}, {{"order", 42}}));
  {
    // C7^2 x| S3 on the plane over Z/7: translations, (x, y) -> (2x, 4y) and
    // the coordinate swap, which inverts the diagonal map.
    auto plane = [](auto f) {
      return map_points(49, [&](std::size_t i) {
        auto [x, y] = f(i / 7, i % 7);
        return (x % 7) * 7 + y % 7;
      });
    };
    const Permutation tx = plane([](std::size_t x, std::size_t y) { return std::pair{x + 1, y}; });
    const Permutation ty = plane([](std::size_t x, std::size_t y) { return std::pair{x, y + 1}; });
    const Permutation h = plane([](std::size_t x, std::size_t y) { return std::pair{2 * x, 4 * y}; });
    const Permutation s = plane([](std::size_t x, std::size_t y) { return std::pair{y, x}; });
    specs.push_back(make_spec("dfrob_294", PermutationGroup(49, {tx, ty, h, s}), {"double-frobenius", "ti-hall"},
                              {{"H", {h}}}, {{"order", 294}}));
  }

  // Coprime action of A on the normal subgroup N.
  {
    const Permutation c3 = Permutation::from_cycles(8, {{0, 1, 2}});
    const Permutation c5 = Permutation::from_cycles(8, {{3, 4, 5, 6, 7}});
    const Permutation t = Permutation::from_cycles(8, {{1, 2}});
    specs.push_back(make_spec("c15_c2", PermutationGroup(8, {c3, c5, t}), {"coprime-pair", "small"},
                              {{"N", {c3, c5}}, {"A", {t}}},
                              {{"order", 30}, {"fixed.order", 5}, {"commutator.order", 3}}));
  }

  // Further groups above the small range.
  specs.push_back(make_spec("sl2_3", sl2(3), {"linear"}, {}, {{"order", 24}}));
  specs.push_back(make_spec("sl2_5", sl2(5), {"linear"}, {}, {{"order", 120}}));
  specs.push_back(make_spec("psl2_7", psl2(7), {"linear", "simple"}, {}, {{"order", 168}}));
  specs.push_back(make_spec("s5", symmetric(5), {}, {}, {{"order", 120}}));
  specs.push_back(make_spec("sl2_8_c3", field_aut_extension(8, 3), {"field-automorphism"},
                            {{"N", sl2(8).generators()}}, {{"order", 1512}}));

  // Small groups from the constructors.
  for (std::size_t n = 1; n <= 63; ++n) {
    specs.push_back(make_spec("c" + std::to_string(n), cyclic(n), {"small", "cyclic"}, {}, {{"order", n}}));
  }
  for (std::size_t n = 3; 2 * n <= 63; ++n) {
    const PermutationGroup d = dihedral(n);
    std::vector<std::string> tags{"small", "dihedral"};
    Subgroups subs;
    if (n % 2 == 1) {
      tags.insert(tags.begin(), "frobenius");
      subs.push_back({"H", {d.generators().back()}});
    }
    specs.push_back(make_spec("d" + std::to_string(2 * n), d, tags, subs, {{"order", 2 * n}}));
  }
  for (std::size_t order : {8, 16, 32}) {
    specs.push_back(make_spec("q" + std::to_string(order), generalized_quaternion(order), {"small", "quaternion"}, {},
                              {{"order", order}}));
  }
  struct Product {
    const char* name;
    PermutationGroup a;
    PermutationGroup b;
  };
  const PermutationGroup v4 = direct_product(cyclic(2), cyclic(2));
  const std::vector<Product> products{
      {"c2xc2", cyclic(2), cyclic(2)},          {"c2xc2xc2", v4, cyclic(2)},
      {"c2xc2xc2xc2", v4, v4},                  {"c2xc4", cyclic(2), cyclic(4)},
      {"c2xc6", cyclic(2), cyclic(6)},          {"c3xc3", cyclic(3), cyclic(3)},
      {"c4xc4", cyclic(4), cyclic(4)},          {"c5xc5", cyclic(5), cyclic(5)},
      {"c3xc3xc3", direct_product(cyclic(3), cyclic(3)), cyclic(3)},
      {"c3xs3", cyclic(3), symmetric(3)},       {"c5xs3", cyclic(5), symmetric(3)},
      {"c7xs3", cyclic(7), symmetric(3)},       {"s3xs3", symmetric(3), symmetric(3)},
      {"c2xa4", cyclic(2), a4},                 {"c3xa4", cyclic(3), a4},
      {"c2xd8", cyclic(2), dihedral(4)},        {"c2xq8", cyclic(2), generalized_quaternion(8)},
      {"c3xd10", cyclic(3), dihedral(5)},       {"c5xa4", cyclic(5), a4},
      {"c2xs4", cyclic(2), symmetric(4)},       {"c3xf21", cyclic(3), f21},
      {"c2xf21", cyclic(2), f21},               {"c4xs3", cyclic(4), symmetric(3)},
      {"c3xd14", cyclic(3), dihedral(7)},
  };
  for (const auto& p : products) {
    PermutationGroup g = direct_product(p.a, p.b);
    specs.push_back(make_spec(p.name, g, {"small", "product"}, {}, {{"order", p.a.order() * p.b.order()}}));
  }

  std::vector<CatalogEntry> out;
  for (auto& s : specs) out.emplace_back(std::move(s));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name() == name) return &e;
  }
  return nullptr;
}

}  // namespace tig
