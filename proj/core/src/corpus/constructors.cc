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

#include "tigroup/corpus/constructors.h"

#include <functional>
#include <string>

#include "tigroup/corpus/field.h"
#include "tigroup/grouplat/primes.h"
#include "tigroup/permcore/errors.h"

namespace tig {

namespace {

Permutation from_map(std::size_t n, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(f(i));
  return Permutation(std::move(images));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

// Projective line: point 0 is infinity, point z + 1 is the field element z.
struct Mobius {
  const FiniteField& f;
  std::uint32_t a, b, c, d;  // z -> (a z + c) / (b z + d)

  std::size_t operator()(std::size_t point) const {
    if (point == 0) {
      // infinity -> a / b
      return b == 0 ? 0 : 1 + f.mul(a, f.inv(b));
    }
    auto z = static_cast<std::uint32_t>(point - 1);
    std::uint32_t num = f.add(f.mul(a, z), c);
    std::uint32_t den = f.add(f.mul(b, z), d);
    if (den == 0) return 0;
    return 1 + f.mul(num, f.inv(den));
  }
};

// Row vector (x, y) times [[a, b], [c, d]] on nonzero vectors of GF(q)^2.
Permutation linear_on_vectors(const FiniteField& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                              std::uint32_t d) {
  const std::uint32_t q = f.order();
  return from_map(static_cast<std::size_t>(q) * q - 1, [&](std::size_t i) {
    auto v = static_cast<std::uint32_t>(i + 1);
    std::uint32_t x = v / q, y = v % q;
    std::uint32_t nx = f.add(f.mul(x, a), f.mul(y, c));
    std::uint32_t ny = f.add(f.mul(x, b), f.mul(y, d));
    return static_cast<std::size_t>(nx) * q + ny - 1;
  });
}

std::vector<Permutation> projective_generators(const FiniteField& f) {
  const std::size_t n = f.order() + 1;
  const std::uint32_t w = f.primitive();
  const std::uint32_t one = 1, zero = 0;
  // z -> z + 1, z -> w^2 z, z -> -1 / z
  return {from_map(n, Mobius{f, one, zero, one, one}),
          from_map(n, Mobius{f, f.mul(w, w), zero, zero, one}),
          from_map(n, Mobius{f, zero, f.neg(one), one, zero})};
}

}  // namespace

PermutationGroup cyclic(std::size_t n) {
  require(n >= 1, "cyclic: n must be positive");
  if (n == 1) return PermutationGroup::trivial(1);
  return PermutationGroup(n, {from_map(n, [n](std::size_t i) { return (i + 1) % n; })});
}

PermutationGroup dihedral(std::size_t n) {
  require(n >= 3, "dihedral: n must be at least 3");
  return PermutationGroup(n, {from_map(n, [n](std::size_t i) { return (i + 1) % n; }),
                              from_map(n, [n](std::size_t i) { return (n - i) % n; })});
}

PermutationGroup generalized_quaternion(std::size_t order) {
  require(order >= 8 && (order & (order - 1)) == 0, "generalized_quaternion: order must be a power of two >= 8");
  const std::size_t m = order / 2;  // |<x>|
  // Element x^a y^b has index a + m b; y x^c = x^-c y and y^2 = x^(m/2).
  auto mul = [m](std::size_t g, std::size_t h) {
    std::size_t a = g % m, b = g / m, c = h % m, d = h / m;
    std::size_t e = b ? (a + m - c) % m : (a + c) % m;
    std::size_t s = b + d;
    if (s == 2) {
      e = (e + m / 2) % m;
      s = 0;
    }
    return e + m * s;
  };
  return PermutationGroup(order, {from_map(order, [&](std::size_t g) { return mul(g, 1); }),
                                  from_map(order, [&](std::size_t g) { return mul(g, m); })});
}

PermutationGroup symmetric(std::size_t n) {
  require(n >= 1, "symmetric: n must be positive");
  if (n == 1) return PermutationGroup::trivial(1);
  if (n == 2) return cyclic(2);
  return PermutationGroup(n, {from_map(n, [n](std::size_t i) { return (i + 1) % n; }),
                              from_map(n, [](std::size_t i) { return i < 2 ? 1 - i : i; })});
}

PermutationGroup alternating(std::size_t n) {
  require(n >= 1, "alternating: n must be positive");
  if (n < 3) return PermutationGroup::trivial(n);
  std::vector<Permutation> gens{from_map(n, [](std::size_t i) { return i < 3 ? (i + 1) % 3 : i; })};
  if (n > 3) {
    // An (n or n-1)-cycle of even parity.
    std::size_t start = n % 2 == 1 ? 0 : 1;
    gens.push_back(from_map(n, [n, start](std::size_t i) {
      if (i < start) return i;
      return i + 1 == n ? start : i + 1;
    }));
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup affine_group(std::uint32_t q, std::uint32_t d) {
  FiniteField f(q);
  require(d >= 1 && (q - 1) % d == 0, "affine_group: d must divide q - 1");
  // Translations by the basis elements p^k of the field's digit encoding.
  std::vector<Permutation> gens;
  for (std::uint32_t k = 0, b = 1; k < f.degree(); ++k, b *= f.characteristic()) {
    gens.push_back(from_map(q, [&](std::size_t z) { return f.add(static_cast<std::uint32_t>(z), b); }));
  }
  if (d > 1) {
    std::uint32_t a = f.pow(f.primitive(), (q - 1) / d);
    gens.push_back(from_map(q, [&](std::size_t z) { return f.mul(a, static_cast<std::uint32_t>(z)); }));
  }
  return PermutationGroup(q, std::move(gens));
}

PermutationGroup agl1(std::uint32_t q) {
  require(is_prime(q), "agl1: q must be prime");
  return affine_group(q, q - 1);
}

PermutationGroup sl2(std::uint32_t q) {
  FiniteField f(q);
  if (q % 2 == 0) return PermutationGroup(q + 1, projective_generators(f));
  const std::uint32_t w = f.primitive();
  const std::uint32_t one = 1, zero = 0;
  return PermutationGroup(static_cast<std::size_t>(q) * q - 1,
                          {linear_on_vectors(f, one, one, zero, one),
                           linear_on_vectors(f, w, zero, zero, f.inv(w)),
                           linear_on_vectors(f, zero, one, f.neg(one), zero)});
}

PermutationGroup psl2(std::uint32_t q) {
  FiniteField f(q);
  return PermutationGroup(q + 1, projective_generators(f));
}

Permutation field_automorphism(std::uint32_t q, std::uint32_t f_order) {
  FiniteField f(q);
  require(f_order >= 1 && f.degree() % f_order == 0, "field_automorphism: order must divide the field degree");
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < f.degree() / f_order; ++i) e *= f.characteristic();
  auto frob = [&](std::uint32_t z) { return f.pow(z, e); };
  if (q % 2 == 0) {
    return from_map(q + 1, [&](std::size_t pt) { return pt == 0 ? 0 : 1 + frob(static_cast<std::uint32_t>(pt - 1)); });
  }
  return from_map(static_cast<std::size_t>(q) * q - 1, [&](std::size_t i) {
    auto v = static_cast<std::uint32_t>(i + 1);
    return static_cast<std::size_t>(frob(v / q)) * q + frob(v % q) - 1;
  });
}

PermutationGroup field_aut_extension(std::uint32_t q, std::uint32_t f) {
  return semidirect_by_normalizing_perms(sl2(q), {field_automorphism(q, f)});
}

Permutation extend(const Permutation& x, std::size_t degree, std::size_t offset) {
  require(offset + x.degree() <= degree, "extend: target degree too small");
  return from_map(degree, [&](std::size_t i) {
    if (i < offset || i >= offset + x.degree()) return i;
    return offset + x[static_cast<Point>(i - offset)];
  });
}

PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& x : a.generators()) gens.push_back(extend(x, n));
  for (const auto& y : b.generators()) gens.push_back(extend(y, n, a.degree()));
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup semidirect_by_normalizing_perms(const PermutationGroup& g,
                                                 const std::vector<Permutation>& normalizers) {
  std::vector<Permutation> gens = g.generators();
  for (const auto& t : normalizers) {
    require(t.degree() == g.degree(), "semidirect: degree mismatch");
    for (const auto& x : g.generators()) {
      require(g.contains(x.conjugate_by(t)), "semidirect: " + to_cycle_string(t) + " does not normalize the group");
    }
    gens.push_back(t);
  }
  return PermutationGroup(g.degree(), std::move(gens));
}

}  // namespace tig
