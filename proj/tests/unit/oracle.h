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

// Brute-force references over explicit element sets. Everything here works
// from the definitions and never touches a stabilizer chain, so the library
// can be checked against it.

#ifndef TIGROUP_TESTS_UNIT_ORACLE_H_
#define TIGROUP_TESTS_UNIT_ORACLE_H_

#include <cstdint>
#include <set>
#include <vector>

#include "tigroup/permcore/perm_group.h"

namespace oracle {

using tig::Permutation;
using ElemSet = std::set<Permutation>;

inline ElemSet closure(std::size_t degree, const std::vector<Permutation>& gens) {
  ElemSet out{Permutation::identity(degree)};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : gens) {
      Permutation y = queue[head] * s;
      if (out.insert(y).second) queue.push_back(y);
    }
  }
  return out;
}

inline ElemSet elements(const tig::PermutationGroup& g) { return closure(g.degree(), g.generators()); }

inline ElemSet conjugate(const ElemSet& h, const Permutation& t) {
  ElemSet out;
  for (const auto& x : h) out.insert(x.conjugate_by(t));
  return out;
}

inline ElemSet meet(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  for (const auto& x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

// H cap H^x is H or 1 for every x.
inline bool is_ti(const ElemSet& g, const ElemSet& h) {
  for (const auto& x : g) {
    const std::size_t m = meet(h, conjugate(h, x)).size();
    if (m != 1 && m != h.size()) return false;
  }
  return true;
}

inline ElemSet normalizer(const ElemSet& g, const ElemSet& h) {
  ElemSet out;
  for (const auto& x : g) {
    if (conjugate(h, x) == h) out.insert(x);
  }
  return out;
}

inline ElemSet centralizer(const ElemSet& g, const ElemSet& s) {
  ElemSet out;
  for (const auto& x : g) {
    bool ok = true;
    for (const auto& y : s) ok = ok && x * y == y * x;
    if (ok) out.insert(x);
  }
  return out;
}

inline bool is_normal(const ElemSet& g, const ElemSet& h) { return normalizer(g, h).size() == g.size(); }

// Identity plus every element outside all conjugates of H.
inline ElemSet frobenius_kernel(const ElemSet& g, const ElemSet& h) {
  ElemSet covered;
  for (const auto& x : g) {
    for (const auto& y : conjugate(h, x)) covered.insert(y);
  }
  ElemSet out;
  for (const auto& x : g) {
    if (x.is_identity() || !covered.count(x)) out.insert(x);
  }
  return out;
}

inline bool is_subgroup(const ElemSet& s) {
  for (const auto& a : s) {
    for (const auto& b : s) {
      if (!s.count(a * b.inverse())) return false;
    }
  }
  return !s.empty();
}

inline std::uint64_t factorial(unsigned n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace oracle

#endif  // TIGROUP_TESTS_UNIT_ORACLE_H_
