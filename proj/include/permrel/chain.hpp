#pragma once

// Base and strong generating set (stabilizer chain) built by Schreier-Sims.
//
// Construction runs a seeded random Schreier-Sims phase and then a
// deterministic Schreier-generator verification pass, so the result is exact
// and independent of the random phase. When the caller supplies the true group
// order the verification pass is skipped once that order is reached.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "permutation.hpp"

namespace permrel {

using BigInt = boost::multiprecision::cpp_int;

struct ChainLevel {
  Point base_point = 0;
  /// Strong generators fixing all earlier base points.
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  /// orbit_index[a] = position of a in orbit, or -1.
  std::vector<int> orbit_index;
  /// transversal[k] maps base_point to orbit[k]; inverses kept alongside.
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inv;

  bool in_orbit(Point a) const { return orbit_index[a] >= 0; }
  const Permutation& rep(Point a) const { return transversal[static_cast<std::size_t>(orbit_index[a])]; }
  const Permutation& rep_inv(Point a) const {
    return transversal_inv[static_cast<std::size_t>(orbit_index[a])];
  }
};

class StabilizerChain {
 public:
  StabilizerChain() = default;

  /// base_prefix is honored exactly (possibly with redundant levels);
  /// further base points are chosen as the smallest point moved by the
  /// element that needs them.
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {}, std::optional<BigInt> known_order = std::nullopt)
      : degree_(degree) {
    for (Point b : base_prefix) {
      bool dup = false;
      for (auto& lv : levels_) dup = dup || lv.base_point == b;
      if (!dup) push_level(b);
    }
    std::vector<Permutation> gens;
    for (const auto& g : generators)
      if (!g.is_identity()) gens.push_back(g);
    if (gens.empty()) return;
    for (const auto& g : gens) add_generator_if_new(g);
    random_phase(gens, known_order);
    if (!(known_order && order() == *known_order)) verify_phase();
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<ChainLevel>& levels() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (auto& lv : levels_) b.push_back(lv.base_point);
    return b;
  }

  BigInt order() const {
    BigInt o = 1;
    for (auto& lv : levels_) o *= lv.orbit.size();
    return o;
  }

  /// Strips g through the chain. Returns the residue and the level where it
  /// fell out (levels().size() when it passed all levels).
  std::pair<Permutation, std::size_t> sift(Permutation g) const {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const auto& lv = levels_[i];
      Point img = g[lv.base_point];
      if (!lv.in_orbit(img)) return {std::move(g), i};
      g *= lv.rep_inv(img);
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    auto [res, lvl] = sift(g);
    return lvl == levels_.size() && res.is_identity();
  }

  std::vector<Permutation> strong_generators() const {
    return levels_.empty() ? std::vector<Permutation>{} : levels_.front().generators;
  }

  /// Mixed-radix index in [0, |G|) of a member element.
  BigInt element_index(Permutation g) const {
    BigInt idx = 0;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const auto& lv = levels_[i];
      Point img = g[lv.base_point];
      idx = idx * lv.orbit.size() + static_cast<unsigned>(lv.orbit_index[img]);
      g *= lv.rep_inv(img);
    }
    return idx;
  }

  /// Inverse of element_index. Elements are u_k * ... * u_0 with u_i the
  /// transversal element chosen at level i.
  Permutation element_at(BigInt idx) const {
    std::vector<std::size_t> digits(levels_.size());
    for (std::size_t i = levels_.size(); i-- > 0;) {
      std::size_t r = levels_[i].orbit.size();
      digits[i] = static_cast<std::size_t>(idx % r);
      idx /= r;
    }
    Permutation g(degree_);
    for (std::size_t i = 0; i < levels_.size(); ++i) g = levels_[i].transversal[digits[i]] * g;
    return g;
  }

 private:
  void push_level(Point b) {
    ChainLevel lv;
    lv.base_point = b;
    lv.orbit = {b};
    lv.orbit_index.assign(degree_, -1);
    lv.orbit_index[b] = 0;
    lv.transversal = {Permutation(degree_)};
    lv.transversal_inv = {Permutation(degree_)};
    levels_.push_back(std::move(lv));
  }

  void extend_orbit(ChainLevel& lv, const Permutation& new_gen) {
    std::size_t old = lv.orbit.size();
    // New generator applied to every known point, then closure under all gens.
    for (std::size_t k = 0; k < old; ++k) {
      Point img = new_gen[lv.orbit[k]];
      if (!lv.in_orbit(img)) add_orbit_point(lv, img, lv.transversal[k] * new_gen);
    }
    for (std::size_t k = old; k < lv.orbit.size(); ++k) {
      for (const auto& s : lv.generators) {
        Point img = s[lv.orbit[k]];
        if (!lv.in_orbit(img)) add_orbit_point(lv, img, lv.transversal[k] * s);
      }
    }
  }

  static void add_orbit_point(ChainLevel& lv, Point p, Permutation rep) {
    lv.orbit_index[p] = static_cast<int>(lv.orbit.size());
    lv.orbit.push_back(p);
    lv.transversal_inv.push_back(rep.inverse());
    lv.transversal.push_back(std::move(rep));
  }

  /// Adds a residue that fixes base points 0..drop-1 to levels 0..drop.
  void install(const Permutation& h, std::size_t drop) {
    if (drop == levels_.size()) {
      Point moved = 0;
      for (std::size_t i = 0; i < degree_; ++i)
        if (h[static_cast<Point>(i)] != i) {
          moved = static_cast<Point>(i);
          break;
        }
      push_level(moved);
    }
    for (std::size_t i = 0; i <= drop; ++i) {
      levels_[i].generators.push_back(h);
      extend_orbit(levels_[i], h);
    }
  }

  bool add_generator_if_new(const Permutation& g) {
    auto [res, drop] = sift(g);
    if (drop == levels_.size() && res.is_identity()) return false;
    install(res, drop);
    return true;
  }

  void random_phase(const std::vector<Permutation>& gens, const std::optional<BigInt>& known_order) {
    // Product replacement with a fixed seed.
    std::mt19937_64 rng(0x5eedULL + degree_);
    std::vector<Permutation> slots = gens;
    while (slots.size() < 10) slots.push_back(gens[slots.size() % gens.size()]);
    Permutation acc(degree_);
    auto next = [&] {
      std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
      std::size_t i = pick(rng), j = pick(rng);
      while (j == i) j = pick(rng);
      bool left = rng() & 1u;
      bool inv = rng() & 1u;
      const Permutation rhs = inv ? slots[j].inverse() : slots[j];
      slots[i] = left ? rhs * slots[i] : slots[i] * rhs;
      acc = acc * slots[i];
      return acc;
    };
    for (int i = 0; i < 40; ++i) next();
    const int patience = known_order ? 400 : 25;
    int quiet = 0;
    std::size_t guard = 0;
    while (quiet < patience && guard++ < 200000) {
      if (known_order && order() == *known_order) return;
      if (add_generator_if_new(next()))
        quiet = 0;
      else
        ++quiet;
    }
  }

  /// Deterministic check that every Schreier generator sifts; installs
  /// residues and resumes at the deepest changed level until stable.
  void verify_phase() {
    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool changed = false;
      std::size_t resume = 0;
      auto& lv = levels_[i];
      for (std::size_t k = 0; k < lv.orbit.size() && !changed; ++k) {
        for (std::size_t s = 0; s < lv.generators.size() && !changed; ++s) {
          const Permutation& gen = lv.generators[s];
          Point img = gen[lv.orbit[k]];
          Permutation schreier = lv.transversal[k] * gen * lv.rep_inv(img);
          if (schreier.is_identity()) continue;
          auto [res, drop] = sift_from(schreier, i + 1);
          if (drop == levels_.size() && res.is_identity()) continue;
          install_from(res, drop, i + 1);
          resume = drop + 1;
          changed = true;
        }
      }
      if (changed) i = resume;
    }
  }

  std::pair<Permutation, std::size_t> sift_from(Permutation g, std::size_t start) const {
    for (std::size_t j = start; j < levels_.size(); ++j) {
      const auto& lv = levels_[j];
      Point img = g[lv.base_point];
      if (!lv.in_orbit(img)) return {std::move(g), j};
      g *= lv.rep_inv(img);
    }
    return {std::move(g), levels_.size()};
  }

  void install_from(const Permutation& h, std::size_t drop, std::size_t start) {
    if (drop == levels_.size()) {
      Point moved = 0;
      for (std::size_t a = 0; a < degree_; ++a)
        if (h[static_cast<Point>(a)] != a) {
          moved = static_cast<Point>(a);
          break;
        }
      push_level(moved);
    }
    for (std::size_t j = start; j <= drop; ++j) {
      levels_[j].generators.push_back(h);
      extend_orbit(levels_[j], h);
    }
  }

  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
};

}  // namespace permrel
