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

#include "tigroup/grouplat/subgroup.h"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "tigroup/grouplat/lattice.h"
#include "tigroup/permcore/errors.h"

namespace tig {
namespace {

std::size_t key_width(std::size_t degree) { return degree <= 256 ? degree : degree * sizeof(Point); }

Permutation permutation_from_key(const char* data, std::size_t degree) {
  std::vector<Point> images(degree);
  if (degree <= 256) {
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<unsigned char>(data[i]);
  } else {
    std::memcpy(images.data(), data, degree * sizeof(Point));
  }
  return Permutation(std::move(images));
}

void check_same_degree(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) throw InvalidInput("groups act on domains of different size");
}

}  // namespace

PermutationGroup closure(const PermutationGroup& parent, const std::vector<Permutation>& gens) {
  for (const auto& g : gens) {
    if (!parent.contains(g)) {
      throw InvalidInput("generator " + to_cycle_string(g) + " is not in the parent group");
    }
  }
  return PermutationGroup(parent.degree(), gens);
}

PermutationGroup join(const PermutationGroup& a, const PermutationGroup& b) {
  check_same_degree(a, b);
  if (a.contains(b)) return a;
  if (b.contains(a)) return b;
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermutationGroup(a.degree(), std::move(gens));
}

PermutationGroup generate_greedy(std::size_t degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  PermutationGroup current = PermutationGroup::trivial(degree);
  for (const auto& x : elements) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = PermutationGroup(degree, gens);
  }
  return current;
}

std::vector<std::uint64_t> subgroup_ranks(const PermutationGroup& g, const PermutationGroup& h,
                                          const Bounds& bounds) {
  check_same_degree(g, h);
  std::vector<std::uint64_t> ranks;
  ranks.reserve(static_cast<std::size_t>(h.order()));
  const auto& chain = g.chain();
  for_each_element(
      h,
      [&](const Permutation& x) {
        auto r = chain.rank(x);
        if (!r) throw InvalidInput("subgroup is not contained in the ambient group");
        ranks.push_back(*r);
        return true;
      },
      bounds);
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

PermutationGroup conjugate(const PermutationGroup& h, const Permutation& t) {
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto& x : h.generators()) gens.push_back(x.conjugate_by(t));
  return PermutationGroup(h.degree(), std::move(gens));
}

bool normalizes(const PermutationGroup& g, const PermutationGroup& h) {
  check_same_degree(g, h);
  for (const auto& t : g.generators()) {
    for (const auto& x : h.generators()) {
      if (!h.contains(x.conjugate_by(t))) return false;
    }
  }
  return true;
}

bool is_normal(const PermutationGroup& g, const PermutationGroup& h) {
  return g.contains(h) && normalizes(g, h);
}

PermutationGroup intersection(const PermutationGroup& a, const PermutationGroup& b,
                              const Bounds& bounds) {
  check_same_degree(a, b);
  if (b.contains(a)) return a;
  if (a.contains(b)) return b;
  const PermutationGroup& small = a.order() <= b.order() ? a : b;
  const PermutationGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> common;
  for_each_element(
      small,
      [&](const Permutation& x) {
        if (large.contains(x)) common.push_back(x);
        return true;
      },
      bounds);
  return generate_greedy(a.degree(), common);
}

KeyedOrbit subgroup_conjugation_orbit(const PermutationGroup& g, const PermutationGroup& h,
                                      const Bounds& bounds) {
  const auto& chain = g.chain();
  auto act = [&chain](const std::string& key, const Permutation& t) {
    auto ranks = decode_ranks(key);
    for (auto& r : ranks) {
      r = *chain.rank(chain.unrank(r).conjugate_by(t));
    }
    std::sort(ranks.begin(), ranks.end());
    return encode_ranks(ranks);
  };
  return KeyedOrbit(g, encode_ranks(subgroup_ranks(g, h, bounds)), act, bounds.enumeration);
}

PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h,
                            const Bounds& bounds) {
  check_same_degree(g, h);
  if (h.is_trivial() || normalizes(g, h)) return g;
  if (g.contains(h) && h.order() <= bounds.enumeration) {
    return subgroup_conjugation_orbit(g, h, bounds).stabilizer();
  }
  std::vector<Permutation> keep;
  for_each_element(
      g,
      [&](const Permutation& t) {
        for (const auto& x : h.generators()) {
          if (!h.contains(x.conjugate_by(t))) return true;
        }
        keep.push_back(t);
        return true;
      },
      bounds);
  return generate_greedy(g.degree(), keep);
}

PermutationGroup centralizer(const PermutationGroup& g, const PermutationGroup& s,
                             const Bounds& bounds) {
  check_same_degree(g, s);
  if (s.is_trivial() || g.is_trivial()) return g;
  const std::size_t n = g.degree();
  std::string start;
  for (const auto& x : s.generators()) start += x.key();
  const std::size_t width = key_width(n);
  auto act = [n, width](const std::string& key, const Permutation& t) {
    std::string out;
    out.reserve(key.size());
    for (std::size_t off = 0; off < key.size(); off += width) {
      out += permutation_from_key(key.data() + off, n).conjugate_by(t).key();
    }
    return out;
  };
  return KeyedOrbit(g, std::move(start), act, bounds.enumeration).stabilizer();
}

PermutationGroup centralizer(const PermutationGroup& g, const Permutation& x,
                             const Bounds& bounds) {
  return centralizer(g, PermutationGroup(g.degree(), {x}), bounds);
}

PermutationGroup center(const PermutationGroup& g, const Bounds& bounds) {
  return centralizer(g, g, bounds);
}

PermutationGroup core(const PermutationGroup& g, const PermutationGroup& h, const Bounds& bounds) {
  check_same_degree(g, h);
  PermutationGroup current = h;
  while (!normalizes(g, current)) {
    std::vector<Permutation> keep;
    for_each_element(
        current,
        [&](const Permutation& x) {
          for (const auto& t : g.generators()) {
            // x lies in current^t iff t x t^-1 lies in current.
            if (!current.contains(x.conjugate_by(t.inverse()))) return true;
          }
          keep.push_back(x);
          return true;
        },
        bounds);
    current = generate_greedy(g.degree(), keep);
  }
  return current;
}

PermutationGroup normal_closure(const PermutationGroup& g, const std::vector<Permutation>& s) {
  std::vector<Permutation> gens;
  for (const auto& x : s) {
    if (x.degree() != g.degree()) throw InvalidInput("degree mismatch in normal closure");
    if (!x.is_identity()) gens.push_back(x);
  }
  PermutationGroup current(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& t : g.generators()) {
      Permutation c = gens[i].conjugate_by(t);
      if (current.contains(c)) continue;
      gens.push_back(std::move(c));
      current = PermutationGroup(g.degree(), gens);
    }
  }
  return current;
}

PermutationGroup normal_closure(const PermutationGroup& g, const PermutationGroup& s) {
  return normal_closure(g, s.generators());
}

PermutationGroup commutator(const PermutationGroup& a, const PermutationGroup& b) {
  check_same_degree(a, b);
  std::vector<Permutation> comms;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  if (comms.empty()) return PermutationGroup::trivial(a.degree());
  return normal_closure(join(a, b), comms);
}

PermutationGroup derived_subgroup(const PermutationGroup& g) { return commutator(g, g); }

std::vector<PermutationGroup> derived_series(const PermutationGroup& g) {
  std::vector<PermutationGroup> series{g};
  while (!series.back().is_trivial()) {
    PermutationGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const PermutationGroup& g) {
  auto series = derived_series(g);
  return series.back().order() == 1;
}

bool is_abelian(const PermutationGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

bool is_nilpotent(const PermutationGroup& g) {
  PermutationGroup term = g;
  while (!term.is_trivial()) {
    PermutationGroup next = commutator(term, g);
    if (next.order() == term.order()) return false;
    term = std::move(next);
  }
  return true;
}

bool is_cyclic(const PermutationGroup& g, const Bounds&) {
  if (!is_abelian(g)) return false;
  std::uint64_t exponent = 1;
  for (const auto& x : g.generators()) exponent = std::lcm(exponent, x.order());
  return exponent == g.order();
}

bool is_elementary_abelian(const PermutationGroup& g) {
  if (g.is_trivial()) return true;
  if (!is_abelian(g)) return false;
  std::uint64_t p = g.generators().front().order();
  if (!is_prime(p)) return false;
  for (const auto& x : g.generators()) {
    if (x.order() != p) return false;
  }
  return true;
}

namespace {

// Some y in n with y not in p, y^prime in p. Requires p normal in n and
// prime dividing |n : p|.
std::optional<Permutation> element_of_order_p_modulo(const PermutationGroup& n,
                                                     const PermutationGroup& p,
                                                     std::uint64_t prime, const Bounds& bounds) {
  auto try_element = [&](const Permutation& x) -> std::optional<Permutation> {
    std::uint64_t m = x.order();
    // Smallest d | m with x^d in p.
    std::uint64_t d = m;
    for (std::uint64_t k = 1; k <= m; ++k) {
      if (m % k == 0 && p.contains(x.pow(k))) {
        d = k;
        break;
      }
    }
    if (d % prime != 0) return std::nullopt;
    return x.pow(d / prime);
  };
  const auto& gens = n.generators();
  for (const auto& x : gens) {
    if (auto y = try_element(x)) return y;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (auto y = try_element(gens[i] * gens[j])) return y;
    }
  }
  std::optional<Permutation> found;
  for_each_element(
      n,
      [&](const Permutation& x) {
        found = try_element(x);
        return !found.has_value();
      },
      bounds);
  return found;
}

}  // namespace

PermutationGroup sylow(const PermutationGroup& g, std::uint64_t p, const Bounds& bounds) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g.order(), p);
  PermutationGroup current = PermutationGroup::trivial(g.degree());
  while (current.order() < target) {
    PermutationGroup n = normalizer(g, current, bounds);
    auto y = element_of_order_p_modulo(n, current, p, bounds);
    if (!y) throw InvalidInput("no element of order p modulo a non-Sylow p-subgroup");
    std::vector<Permutation> gens = current.generators();
    gens.push_back(std::move(*y));
    current = PermutationGroup(g.degree(), std::move(gens));
  }
  return current;
}

std::optional<PermutationGroup> invariant_sylow(const PermutationGroup& n, const PermutationGroup& a,
                                                std::uint64_t p, const Bounds& bounds) {
  PermutationGroup s = sylow(n, p, bounds);
  if (normalizes(a, s)) return s;
  KeyedOrbit orbit = subgroup_conjugation_orbit(n, s, bounds);
  for (std::size_t i = 1; i < orbit.size(); ++i) {
    PermutationGroup c = conjugate(s, orbit.transversal(i));
    if (normalizes(a, c)) return c;
  }
  return std::nullopt;
}

std::optional<PermutationGroup> hall(const PermutationGroup& g, const PrimeSet& pi,
                                     const Bounds& bounds) {
  const std::uint64_t order = g.order();
  const std::uint64_t target = pi.pi_part(order);
  std::vector<std::uint64_t> primes;
  for (auto p : prime_divisors(order)) {
    if (pi.contains(p)) primes.push_back(p);
  }
  if (primes.empty()) return PermutationGroup::trivial(g.degree());
  if (target == order) return g;
  if (primes.size() == 1) return sylow(g, primes.front(), bounds);

  PermutationGroup current = sylow(g, primes.front(), bounds);
  bool stuck = false;
  for (std::size_t i = 1; i < primes.size() && !stuck; ++i) {
    PermutationGroup s = sylow(g, primes[i], bounds);
    KeyedOrbit orbit = subgroup_conjugation_orbit(g, s, bounds);
    stuck = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      PermutationGroup candidate = join(current, conjugate(s, orbit.transversal(k)));
      if (pi.is_pi_number(candidate.order())) {
        current = std::move(candidate);
        stuck = false;
        break;
      }
    }
  }
  if (current.order() == target) return current;

  if (order > bounds.subgroups) {
    throw BoundExceeded("Hall subgroup search: group order " + std::to_string(order) +
                        " exceeds subgroup bound " + std::to_string(bounds.subgroups));
  }
  for (const auto& rep : subgroups_up_to_conjugacy(g, bounds)) {
    if (rep.order() == target) return rep;
  }
  return std::nullopt;
}

bool is_hall_in(const PermutationGroup& h, const PermutationGroup& k) {
  std::uint64_t index = k.order() / h.order();
  return std::gcd(h.order(), index) == 1;
}

std::optional<Permutation> are_conjugate_subgroups(const PermutationGroup& g,
                                                   const PermutationGroup& h1,
                                                   const PermutationGroup& h2,
                                                   const Bounds& bounds) {
  check_same_degree(h1, h2);
  if (h1.order() != h2.order()) return std::nullopt;
  if (h1.contains(h2)) return Permutation(g.degree());
  if (!g.contains(h1) || !g.contains(h2)) throw InvalidInput("subgroups must lie in the group");
  KeyedOrbit orbit = subgroup_conjugation_orbit(g, h1, bounds);
  auto idx = orbit.find(encode_ranks(subgroup_ranks(g, h2, bounds)));
  if (!idx) return std::nullopt;
  return orbit.transversal(*idx);
}

namespace {

std::string element_key(const Permutation& x) {
  auto images = x.images();
  return std::string(reinterpret_cast<const char*>(images.data()), images.size_bytes());
}

}  // namespace

std::optional<Permutation> are_conjugate_elements(const PermutationGroup& g, const Permutation& x,
                                                  const Permutation& y, const Bounds& bounds) {
  if (x == y) return Permutation(g.degree());
  if (x.order() != y.order()) return std::nullopt;
  const std::size_t n = g.degree();
  KeyedOrbit orbit(
      g, element_key(x),
      [n](const std::string& key, const Permutation& s) {
        std::vector<Point> images(n);
        std::memcpy(images.data(), key.data(), key.size());
        return element_key(Permutation(std::move(images)).conjugate_by(s));
      },
      bounds.enumeration);
  auto idx = orbit.find(element_key(y));
  if (!idx) return std::nullopt;
  return orbit.transversal(*idx);
}

std::uint64_t product_set_size(const PermutationGroup& a, const PermutationGroup& b,
                               const Bounds& bounds) {
  return a.order() * b.order() / intersection(a, b, bounds).order();
}

}  // namespace tig
