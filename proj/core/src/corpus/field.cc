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

#include "tigroup/corpus/field.h"

#include <string>

#include "tigroup/permcore/errors.h"

namespace tig {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

Poly digits(std::uint32_t x, std::uint32_t p, std::uint32_t k) {
  Poly d(k);
  for (auto& c : d) {
    c = x % p;
    x /= p;
  }
  return d;
}

std::uint32_t number(const Poly& d, std::uint32_t p) {
  std::uint32_t x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

// Product of a and b reduced modulo the monic polynomial x^k + low(x).
Poly mul_mod(const Poly& a, const Poly& b, const Poly& low, std::uint32_t p) {
  const std::size_t k = low.size();
  Poly prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^(d-k) * x^k = -x^(d-k) * low(x)
    for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * low[i]) % p;
  }
  prod.resize(k);
  return prod;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (q < 2 || q > 1024) throw InvalidInput("field order out of range: " + std::to_string(q));
  p_ = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p_ = d;
      break;
    }
  }
  k_ = 0;
  for (std::uint32_t r = q; r > 1; r /= p_) {
    if (r % p_ != 0) throw InvalidInput("field order is not a prime power: " + std::to_string(q));
    ++k_;
  }

  add_.resize(q * q);
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly da = digits(a, p_, k_);
    Poly na(k_);
    for (std::uint32_t i = 0; i < k_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = number(na, p_);
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly db = digits(b, p_, k_);
      Poly s(k_);
      for (std::uint32_t i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = number(s, p_);
    }
  }

  // The reduction polynomial is irreducible iff the resulting ring has no
  // zero divisors.
  for (std::uint32_t low_code = 0; low_code < q; ++low_code) {
    Poly low = digits(low_code, p_, k_);
    mul_.assign(q * q, 0);
    bool field = true;
    for (std::uint32_t a = 1; a < q && field; ++a) {
      Poly da = digits(a, p_, k_);
      for (std::uint32_t b = 1; b < q; ++b) {
        std::uint32_t c = number(mul_mod(da, digits(b, p_, k_), low, p_), p_);
        if (c == 0) {
          field = false;
          break;
        }
        mul_[a * q + b] = c;
      }
    }
    if (field) break;
  }

  inv_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g;
    std::uint32_t ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidInput("inverse of zero");
  return inv_[a];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace tig
