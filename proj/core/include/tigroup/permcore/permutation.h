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

#ifndef TIGROUP_PERMCORE_PERMUTATION_H_
#define TIGROUP_PERMCORE_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tig {

using Point = std::uint32_t;

// A bijection of {0, ..., degree-1}, stored as its image array.
//
// Products are left-to-right: (a * b)(x) = b(a(x)). With this convention
// conjugation x^g = g^-1 * x * g is a right action, which is how every
// group-theoretic formula in this library is written.
class Permutation {
 public:
  Permutation() = default;

  // Identity of the given degree.
  explicit Permutation(std::size_t degree);

  // Throws InvalidInput unless `images` is a bijection of [0, size).
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  // Builds from disjoint cycles; throws InvalidInput on overlap or range.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  Point image(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Order of the permutation (lcm of cycle lengths).
  std::uint64_t order() const;

  // Smallest point moved, or degree() for the identity.
  Point first_moved() const;

  // Returns a^k for k >= 0.
  Permutation pow(std::uint64_t k) const;

  // g^-1 * this * g.
  Permutation conjugate_by(const Permutation& g) const;

  // Sorted list of disjoint nontrivial cycles, each starting at its least point.
  std::vector<std::vector<Point>> cycles() const;

  // Compact byte string identifying the permutation; usable as a hash key.
  std::string key() const;

  Permutation& operator*=(const Permutation& rhs);
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

// Left-to-right product; throws InvalidInput on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

// a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

// Cycle notation with 0-based points: "(0 1 2)(3 4)", "()" for identity.
Permutation parse_permutation(std::string_view text, std::size_t degree);
std::string to_cycle_string(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace tig

#endif  // TIGROUP_PERMCORE_PERMUTATION_H_
