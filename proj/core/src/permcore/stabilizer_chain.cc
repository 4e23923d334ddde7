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

#include "tigroup/permcore/stabilizer_chain.h"

#include <limits>
#include <utility>

#include "tigroup/permcore/errors.h"

namespace tig {
namespace {

// Schreier-Sims over the complete base 0, 1, ..., n-1. Levels whose
// stabilizer fixes their point stay inactive and cost nothing; the active
// ones form the reported base.
class Builder {
 public:
  explicit Builder(std::size_t degree) : n_(degree), levels_(degree) {}

  void run(std::span<const Permutation> generators) {
    for (const auto& g : generators) {
      if (g.degree() != n_) throw InvalidInput("generator degree mismatch");
      if (g.is_identity()) continue;
      auto [residue, level] = sift(g, 0);
      if (level < n_) add_strong(std::move(residue));
    }
    if (strong_.empty()) return;

    std::size_t i = n_;
    while (i-- > 0) {
      if (!levels_[i].active) continue;
      if (auto restart = check_level(i)) {
        // Levels below `*restart` are complete again once it is processed.
        i = *restart + 1;
      }
    }
  }

  StabilizerChain::Level take_level(std::size_t i) {
    StabilizerChain::Level out;
    auto& lv = levels_[i];
    out.base = static_cast<Point>(i);
    out.orbit = std::move(lv.orbit);
    out.orbit_position = std::move(lv.position);
    out.transversal = std::move(lv.transversal);
    out.inverse_transversal.reserve(out.transversal.size());
    for (const auto& u : out.transversal) out.inverse_transversal.push_back(u.inverse());
    return out;
  }

  bool level_nontrivial(std::size_t i) const {
    return levels_[i].active && levels_[i].orbit.size() > 1;
  }

  std::vector<Permutation> take_strong() { return std::move(strong_); }

 private:
  struct BuildLevel {
    bool active = false;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse;
  };

  // Returns (residue, level) where level == n_ means g sifted to the identity.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const {
    for (std::size_t l = start; l < n_; ++l) {
      Point d = g[static_cast<Point>(l)];
      if (d == l) continue;
      const auto& lv = levels_[l];
      if (!lv.active || lv.position[d] < 0) return {std::move(g), l};
      g *= lv.inverse[static_cast<std::size_t>(lv.position[d])];
    }
    return {std::move(g), n_};
  }

  void add_strong(Permutation g) {
    Point fm = g.first_moved();
    strong_.push_back(std::move(g));
    first_moved_.push_back(fm);
    for (std::size_t l = 0; l <= fm; ++l) recompute_orbit(l);
  }

  void recompute_orbit(std::size_t l) {
    auto& lv = levels_[l];
    lv.active = true;
    lv.orbit.assign(1, static_cast<Point>(l));
    lv.position.assign(n_, -1);
    lv.position[l] = 0;
    lv.transversal.assign(1, Permutation(n_));
    lv.inverse.assign(1, Permutation(n_));
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
      Point x = lv.orbit[head];
      for (std::size_t s = 0; s < strong_.size(); ++s) {
        if (first_moved_[s] < l) continue;
        Point y = strong_[s][x];
        if (lv.position[y] >= 0) continue;
        lv.position[y] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(y);
        lv.transversal.push_back(lv.transversal[head] * strong_[s]);
        lv.inverse.push_back(lv.transversal.back().inverse());
      }
    }
  }

  // Sifts every Schreier generator of level i. On the first failure adds the
  // residue as a strong generator and returns the level it lives on.
  std::optional<std::size_t> check_level(std::size_t i) {
    auto& lv = levels_[i];
    for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
      Point delta = lv.orbit[idx];
      for (std::size_t s = 0; s < strong_.size(); ++s) {
        if (first_moved_[s] < i) continue;
        Point image = strong_[s][delta];
        auto target = static_cast<std::size_t>(lv.position[image]);
        if (lv.transversal[target] == lv.transversal[idx] * strong_[s]) continue;
        Permutation h = lv.transversal[idx] * strong_[s] * lv.inverse[target];
        auto [residue, level] = sift(std::move(h), i + 1);
        if (level < n_) {
          add_strong(std::move(residue));
          return level;
        }
      }
    }
    return std::nullopt;
  }

  std::size_t n_;
  std::vector<BuildLevel> levels_;
  std::vector<Permutation> strong_;
  std::vector<Point> first_moved_;
};

}  // namespace

StabilizerChain StabilizerChain::build(std::size_t degree,
                                       std::span<const Permutation> generators) {
  Builder builder(degree);
  builder.run(generators);
  StabilizerChain chain;
  chain.degree_ = degree;
  for (std::size_t i = 0; i < degree; ++i) {
    if (!builder.level_nontrivial(i)) continue;
    chain.levels_.push_back(builder.take_level(i));
    std::uint64_t len = chain.levels_.back().orbit.size();
    if (chain.order_ > std::numeric_limits<std::uint64_t>::max() / len) {
      throw InvalidInput("group order does not fit in 64 bits");
    }
    chain.order_ *= len;
  }
  chain.strong_generators_ = builder.take_strong();
  return chain;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& lv : levels_) out.push_back(lv.base);
  return out;
}

bool StabilizerChain::contains(const Permutation& g) const { return rank(g).has_value(); }

std::optional<std::uint64_t> StabilizerChain::rank(const Permutation& g) const {
  if (g.degree() != degree_) throw InvalidInput("degree mismatch in membership test");
  Permutation h = g;
  std::uint64_t r = 0;
  for (const auto& lv : levels_) {
    Point d = h[lv.base];
    std::int32_t pos = lv.orbit_position[d];
    if (pos < 0) return std::nullopt;
    r = r * lv.orbit.size() + static_cast<std::uint64_t>(pos);
    if (pos != 0) h *= lv.inverse_transversal[static_cast<std::size_t>(pos)];
  }
  if (!h.is_identity()) return std::nullopt;
  return r;
}

Permutation StabilizerChain::unrank(std::uint64_t rank) const {
  if (rank >= order_) throw InvalidInput("rank out of range");
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t k = levels_.size(); k-- > 0;) {
    digits[k] = static_cast<std::size_t>(rank % levels_[k].orbit.size());
    rank /= levels_[k].orbit.size();
  }
  Permutation g(degree_);
  for (std::size_t k = levels_.size(); k-- > 0;) {
    if (digits[k] != 0) g *= levels_[k].transversal[digits[k]];
  }
  return g;
}

}  // namespace tig
