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

#ifndef TIGROUP_GROUPLAT_PRIMES_H_
#define TIGROUP_GROUPLAT_PRIMES_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tig {

bool is_prime(std::uint64_t n);

// Trial-division factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Largest divisor of n that is a power of p.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// A set of primes, the "pi" of Hall and pi-separability questions.
class PrimeSet {
 public:
  PrimeSet() = default;
  // Throws InvalidInput if any entry is not prime.
  PrimeSet(std::initializer_list<std::uint64_t> primes);
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  static PrimeSet of_order(std::uint64_t n) { return PrimeSet(prime_divisors(n)); }
  // Parses "2,3,7"; throws InvalidInput.
  static PrimeSet parse(std::string_view text);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  bool contains(std::uint64_t p) const;

  // Primes dividing n that are not in this set.
  PrimeSet complement_in(std::uint64_t n) const;

  // n is a pi-number: every prime divisor of n lies in the set (1 qualifies).
  bool is_pi_number(std::uint64_t n) const;
  // Product of the p-parts of n over p in the set.
  std::uint64_t pi_part(std::uint64_t n) const;

  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

}  // namespace tig

#endif  // TIGROUP_GROUPLAT_PRIMES_H_
