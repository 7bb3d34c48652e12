#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "chain.hpp"
#include "point_set.hpp"

namespace permrel {

namespace detail {
struct LazyChain {
  std::once_flag once;
  StabilizerChain chain;
  std::optional<BigInt> order_hint;
};
}  // namespace detail

/// A permutation group given by generators. The stabilizer chain is built on
/// first use; copies share it, and concurrent first use is synchronized.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}

  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name = {})
      : degree_(degree), name_(std::move(name)), lazy_(std::make_shared<detail::LazyChain>()) {
    for (auto& g : generators) {
      if (g.degree() != degree) throw DegreeMismatch(degree, g.degree());
      if (!g.is_identity()) generators_.push_back(std::move(g));
    }
  }

  /// Generators must be nonempty; degree taken from the first.
  explicit PermGroup(std::vector<Permutation> generators)
      : PermGroup(generators.empty() ? 0 : generators.front().degree(), std::move(generators)) {}

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  static PermGroup from_cycles(std::size_t degree, const std::vector<std::string>& cycles,
                               std::string name = {}) {
    std::vector<Permutation> gens;
    for (const auto& c : cycles) gens.push_back(Permutation::from_cycles(c, degree));
    return PermGroup(degree, std::move(gens), std::move(name));
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::string& name() const noexcept { return name_; }
  PermGroup named(std::string name) const {
    PermGroup g = *this;
    g.name_ = std::move(name);
    return g;
  }

  /// Returns a copy whose chain construction may stop as soon as this order is
  /// reached. Only pass an order that is known to be exact.
  PermGroup with_order_hint(BigInt order) const {
    PermGroup g(degree_, generators_, name_);
    g.lazy_->order_hint = std::move(order);
    return g;
  }

  const StabilizerChain& chain() const {
    std::call_once(lazy_->once, [this] {
      lazy_->chain = StabilizerChain(degree_, generators_, {}, lazy_->order_hint);
    });
    return lazy_->chain;
  }

  /// A fresh chain whose base starts with the given points (uses the known order).
  StabilizerChain chain_with_base(std::span<const Point> prefix) const {
    return StabilizerChain(degree_, generators_, prefix, order());
  }

  BigInt order() const { return chain().order(); }

  bool is_trivial() const { return generators_.empty(); }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    return chain().contains(g);
  }

  /// Same degree, same order and every generator of each side lies in the other.
  bool operator==(const PermGroup& o) const {
    if (degree_ != o.degree_ || order() != o.order()) return false;
    return std::all_of(o.generators_.begin(), o.generators_.end(), [&](auto& g) { return contains(g); });
  }

  bool is_subgroup_of(const PermGroup& o) const {
    if (degree_ != o.degree_) throw DegreeMismatch(degree_, o.degree_);
    return std::all_of(generators_.begin(), generators_.end(), [&](auto& g) { return o.contains(g); });
  }

  /// Orbit partition of the domain, each orbit sorted, orbits ordered by minimum.
  std::vector<std::vector<Point>> orbits() const {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (auto& g : generators_)
      for (std::size_t a = 0; a < degree_; ++a) {
        int x = find(static_cast<int>(a)), y = find(g[static_cast<Point>(a)]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    std::vector<std::vector<Point>> out;
    std::vector<int> slot(degree_, -1);
    for (std::size_t a = 0; a < degree_; ++a) {
      int r = find(static_cast<int>(a));
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[slot[r]].push_back(static_cast<Point>(a));
    }
    return out;
  }

  std::vector<Point> orbit(Point a) const {
    std::vector<bool> seen(degree_, false);
    std::vector<Point> out{a};
    seen[a] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
      for (auto& g : generators_) {
        Point b = g[out[k]];
        if (!seen[b]) {
          seen[b] = true;
          out.push_back(b);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

  std::vector<Point> fixed_points() const {
    std::vector<Point> out;
    for (std::size_t a = 0; a < degree_; ++a)
      if (std::all_of(generators_.begin(), generators_.end(),
                      [&](auto& g) { return g[static_cast<Point>(a)] == a; }))
        out.push_back(static_cast<Point>(a));
    return out;
  }

  /// All elements, for small groups only.
  std::vector<Permutation> elements(std::size_t limit = 1'000'000) const {
    BigInt n = order();
    if (n > limit) throw BudgetExceeded("group too large to enumerate");
    std::vector<Permutation> out;
    auto count = static_cast<std::size_t>(n);
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(chain().element_at(i));
    return out;
  }

 private:
  std::size_t degree_;
  std::string name_;
  std::vector<Permutation> generators_;
  std::shared_ptr<detail::LazyChain> lazy_;
};

inline PermGroup group(std::vector<Permutation> generators) { return PermGroup(std::move(generators)); }

inline std::string to_string(const BigInt& n) { return n.str(); }

}  // namespace permrel
