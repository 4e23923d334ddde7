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

#include "tigroup/grouplat/primes.h"

#include <algorithm>
#include <charconv>

#include "tigroup/permcore/errors.h"

namespace tig {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  if (n == 0 || p < 2) return part;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes)
    : PrimeSet(std::vector<std::uint64_t>(primes)) {}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_) {
    if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet PrimeSet::parse(std::string_view text) {
  std::vector<std::uint64_t> primes;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view item = text.substr(i, j - i);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidInput("malformed prime list '" + std::string(text) + "'");
    }
    primes.push_back(value);
    i = j + 1;
  }
  return PrimeSet(std::move(primes));
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::complement_in(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  for (auto p : prime_divisors(n)) {
    if (!contains(p)) out.push_back(p);
  }
  return PrimeSet(std::move(out));
}

bool PrimeSet::is_pi_number(std::uint64_t n) const {
  for (auto p : prime_divisors(n)) {
    if (!contains(p)) return false;
  }
  return true;
}

std::uint64_t PrimeSet::pi_part(std::uint64_t n) const {
  std::uint64_t part = 1;
  for (auto p : primes_) part *= p_part(n, p);
  return part;
}

std::string PrimeSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(primes_[i]);
  }
  return out;
}

}  // namespace tig
