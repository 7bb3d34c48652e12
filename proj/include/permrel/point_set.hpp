#pragma once

// Fixed-capacity bitset over {0, ..., n-1}; n <= PointSet::max_degree.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace permrel {

class PointSet {
 public:
  static constexpr std::size_t words = 2;
  static constexpr std::size_t max_degree = 64 * words;

  PointSet() = default;

  explicit PointSet(std::size_t degree) : degree_(static_cast<std::uint16_t>(degree)) {
    if (degree > max_degree)
      throw BudgetExceeded("point sets support degree <= " + std::to_string(max_degree));
  }

  PointSet(std::size_t degree, std::initializer_list<Point> points) : PointSet(degree) {
    for (Point p : points) insert(p);
  }

  template <class Range>
  static PointSet of(std::size_t degree, const Range& points) {
    PointSet s(degree);
    for (auto p : points) s.insert(static_cast<Point>(p));
    return s;
  }

  /// Builds a set from 1-based labels, as printed in text and JSON.
  static PointSet from_one_based(std::size_t degree, std::initializer_list<int> labels) {
    return from_one_based(degree, std::vector<int>(labels));
  }
  static PointSet from_one_based(std::size_t degree, const std::vector<int>& labels) {
    PointSet s(degree);
    for (int v : labels) {
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw ParseError(ParseErrorKind::out_of_range, "point " + std::to_string(v) + " out of range");
      s.insert(static_cast<Point>(v - 1));
    }
    return s;
  }

  static PointSet full(std::size_t degree) {
    PointSet s(degree);
    for (std::size_t i = 0; i < degree; ++i) s.insert(static_cast<Point>(i));
    return s;
  }

  /// Low-word constructor for degree <= 64.
  static PointSet from_mask(std::size_t degree, std::uint64_t mask) {
    PointSet s(degree);
    s.bits_[0] = mask;
    return s;
  }

  std::size_t degree() const noexcept { return degree_; }

  void insert(Point p) {
    check(p);
    bits_[p >> 6] |= std::uint64_t{1} << (p & 63);
  }
  void erase(Point p) {
    check(p);
    bits_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
  }
  bool contains(Point p) const noexcept { return p < degree_ && ((bits_[p >> 6] >> (p & 63)) & 1u); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept { return size() == 0; }

  std::uint64_t mask() const noexcept { return bits_[0]; }
  const std::array<std::uint64_t, words>& raw() const noexcept { return bits_; }

  std::vector<Point> points() const {
    std::vector<Point> out;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t x = bits_[w];
      while (x) {
        out.push_back(static_cast<Point>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
        x &= x - 1;
      }
    }
    return out;
  }

  std::vector<int> one_based() const {
    std::vector<int> out;
    for (Point p : points()) out.push_back(p + 1);
    return out;
  }

  PointSet complement() const {
    PointSet s = full(degree_);
    for (std::size_t w = 0; w < words; ++w) s.bits_[w] &= ~bits_[w];
    return s;
  }

  PointSet operator|(const PointSet& o) const {
    same_degree(o);
    PointSet s = *this;
    for (std::size_t w = 0; w < words; ++w) s.bits_[w] |= o.bits_[w];
    return s;
  }
  PointSet operator&(const PointSet& o) const {
    same_degree(o);
    PointSet s = *this;
    for (std::size_t w = 0; w < words; ++w) s.bits_[w] &= o.bits_[w];
    return s;
  }
  PointSet operator-(const PointSet& o) const {
    same_degree(o);
    PointSet s = *this;
    for (std::size_t w = 0; w < words; ++w) s.bits_[w] &= ~o.bits_[w];
    return s;
  }
  bool is_subset_of(const PointSet& o) const noexcept {
    for (std::size_t w = 0; w < words; ++w)
      if (bits_[w] & ~o.bits_[w]) return false;
    return true;
  }

  /// 1-based "{1,3,5}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Point p : points()) {
      if (!first) out += ',';
      out += std::to_string(p + 1);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
    return a.degree_ == b.degree_ && a.bits_ == b.bits_;
  }

  /// Canonical order: by cardinality, then by the ascending point list.
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    // Lexicographic on point lists equals comparing the lowest differing point:
    // the set containing it is smaller.
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t diff = a.bits_[w] ^ b.bits_[w];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.bits_[w] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  void check(Point p) const {
    if (p >= degree_) throw PreconditionError("point " + std::to_string(p + 1) + " outside domain");
  }
  void same_degree(const PointSet& o) const {
    if (o.degree_ != degree_) throw DegreeMismatch(degree_, o.degree_);
  }

  std::uint16_t degree_ = 0;
  std::array<std::uint64_t, words> bits_{};
};

inline std::ostream& operator<<(std::ostream& os, const PointSet& s) { return os << s.to_string(); }

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept {
    std::uint64_t h = s.degree() * 0x9e3779b97f4a7c15ull;
    for (auto w : s.raw()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

/// { a^p : a in s }.
inline PointSet act_set(const Permutation& p, const PointSet& s) {
  if (p.degree() != s.degree()) throw DegreeMismatch(p.degree(), s.degree());
  PointSet out(s.degree());
  for (Point a : s.points()) out.insert(p[a]);
  return out;
}

}  // namespace permrel
