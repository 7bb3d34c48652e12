#pragma once

// Block systems of transitive groups.

#include <numeric>
#include <optional>

#include "perm_group.hpp"

namespace permrel {

using BlockSystem = std::vector<PointSet>;

namespace detail {

/// Finest block system in which a and b lie in the same block (union-find
/// closure under the generators). Returns the block label of every point.
inline std::vector<int> finest_blocks_joining(const PermGroup& g, Point a, Point b) {
  const std::size_t n = g.degree();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Point, Point>> queue{{a, b}};
  parent[std::max(a, b)] = std::min(a, b);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [x, y] = queue[q];
    for (const auto& gen : g.generators()) {
      int c = find(gen[x]), d = find(gen[y]);
      if (c == d) continue;
      parent[std::max(c, d)] = std::min(c, d);
      queue.emplace_back(static_cast<Point>(c), static_cast<Point>(d));
    }
  }
  std::vector<int> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = find(static_cast<int>(i));
  return label;
}

inline BlockSystem blocks_from_labels(const std::vector<int>& label) {
  const std::size_t n = label.size();
  std::vector<int> slot(n, -1);
  BlockSystem out;
  for (std::size_t i = 0; i < n; ++i) {
    int& s = slot[static_cast<std::size_t>(label[i])];
    if (s < 0) {
      s = static_cast<int>(out.size());
      out.emplace_back(n);
    }
    out[static_cast<std::size_t>(s)].insert(static_cast<Point>(i));
  }
  return out;
}

}  // namespace detail

/// A nontrivial block system with blocks as small as possible, blocks sorted
/// by minimum; nullopt when G is primitive. Ties go to the system whose block
/// through point 1 has the smallest second point.
inline std::optional<BlockSystem> minimal_block_system(const PermGroup& g) {
  if (!g.is_transitive()) throw PreconditionError("block systems need a transitive group");
  const std::size_t n = g.degree();
  std::optional<BlockSystem> best;
  std::size_t best_size = n;
  for (std::size_t a = 1; a < n; ++a) {
    auto label = detail::finest_blocks_joining(g, 0, static_cast<Point>(a));
    std::size_t size = static_cast<std::size_t>(std::count(label.begin(), label.end(), 0));
    if (size < best_size) {
      best_size = size;
      best = detail::blocks_from_labels(label);
    }
  }
  return best;
}

inline bool is_primitive(const PermGroup& g) { return !minimal_block_system(g).has_value(); }

/// True iff every generator maps every block onto a block.
inline bool is_block_system(const PermGroup& g, const BlockSystem& blocks) {
  for (const auto& gen : g.generators())
    for (const auto& b : blocks) {
      PointSet img = act_set(gen, b);
      if (std::find(blocks.begin(), blocks.end(), img) == blocks.end()) return false;
    }
  return true;
}

}  // namespace permrel
