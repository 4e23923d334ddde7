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

#ifndef TIGROUP_CORPUS_FIELD_H_
#define TIGROUP_CORPUS_FIELD_H_

#include <cstdint>
#include <vector>

namespace tig {

// GF(q) for a prime power q <= 1024. Elements are the integers 0..q-1, read
// as base-p digit vectors of polynomial coefficients, so integer order is the
// additive enumeration order. Multiplication is modulo the first monic
// irreducible polynomial of degree k in that same ordering.
class FiniteField {
 public:
  // Throws InvalidInput unless q is a prime power in [2, 1024].
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  // Throws InvalidInput for a == 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Least generator of the multiplicative group.
  std::uint32_t primitive() const { return primitive_; }

 private:
  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> add_, neg_, mul_, inv_;
  std::uint32_t primitive_ = 1;
};

}  // namespace tig

#endif  // TIGROUP_CORPUS_FIELD_H_
