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

#include "tigroup/permcore/permutation.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <cstring>

#include "tigroup/permcore/errors.h"

namespace tig {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw InvalidInput("image array is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point p = cycle[i];
      if (p >= degree) {
        throw InvalidInput("point " + std::to_string(p) + " out of range for degree " +
                           std::to_string(degree));
      }
      if (used[p]) {
        throw InvalidInput("point " + std::to_string(p) + " appears in two cycles");
      }
      used[p] = true;
      result.images_[p] = cycle[(i + 1) % cycle.size()];
    }
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[images_[i]] = static_cast<Point>(i);
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

Permutation Permutation::pow(std::uint64_t k) const {
  Permutation result(images_.size());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // x^g maps g(p) to g(x(p)).
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) {
    result.images_[g.images_[p]] = g.images_[images_[p]];
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::key() const {
  std::string out;
  if (images_.size() <= 256) {
    out.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      out[i] = static_cast<char>(images_[i]);
    }
  } else {
    out.resize(images_.size() * sizeof(Point));
    std::memcpy(out.data(), images_.data(), out.size());
  }
  return out;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (rhs.images_.size() != images_.size()) {
    throw InvalidInput("degree mismatch in product");
  }
  if (&rhs == this) {
    *this = *this * rhs;
    return *this;
  }
  for (auto& p : images_) p = rhs.images_[p];
  return *this;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.images_.size() != b.images_.size()) {
    throw InvalidInput("degree mismatch in product");
  }
  Permutation result;
  result.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) {
    result.images_[i] = b.images_[a.images_[i]];
  }
  return result;
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

Permutation inverse(const Permutation& a) { return a.inverse(); }

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw InvalidInput("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(') {
      throw InvalidInput("expected '(' at offset " + std::to_string(i));
    }
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (i == text.size()) throw InvalidInput("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InvalidInput("unexpected character '" + std::string(1, text[i]) +
                           "' at offset " + std::to_string(i));
      }
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree) break;
        ++i;
      }
      if (value >= degree) {
        throw InvalidInput("point " + std::to_string(value) + " out of range for degree " +
                           std::to_string(degree));
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string to_cycle_string(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_cycle_string(p);
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace tig
