#pragma once

// Permutations of {0, ..., n-1}. Text formats (cycle notation, JSON) are 1-based.
//
// Permutations act on the right and compose left to right: for p * q the
// point a goes to (a^p)^q.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace permrel {

using Point = std::uint16_t;

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Images of 0..n-1; throws PreconditionError unless a bijection.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) throw PreconditionError("image list is not a bijection");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Parses "(1,2,3)(4,5)" with 1-based points. Empty text is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point p) const noexcept { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Left-to-right product: first *this, then rhs.
  Permutation operator*(const Permutation& rhs) const {
    check_degree(rhs);
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  /// *this = *this * rhs without reallocating.
  Permutation& operator*=(const Permutation& rhs) {
    check_degree(rhs);
    for (auto& v : images_) v = rhs.images_[v];
    return *this;
  }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
    return out;
  }

  /// g^-1 * this * g
  Permutation conjugate_by(const Permutation& g) const { return g.inverse() * *this * g; }

  Permutation power(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Permutation acc(degree());
    while (k) {
      if (k & 1u) acc *= base;
      base = base * base;
      k >>= 1u;
    }
    return acc;
  }

  /// Order as the lcm of cycle lengths.
  std::uint64_t order() const {
    std::uint64_t ord = 1;
    for (auto len : cycle_type()) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
    return ord;
  }

  /// Cycle lengths (including fixed points as 1-cycles), sorted descending.
  std::vector<std::size_t> cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<std::size_t> lens;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  }

  std::vector<Point> support() const {
    std::vector<Point> s;
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) s.push_back(static_cast<Point>(i));
    return s;
  }

  /// Canonical 1-based cycle notation: cycles ordered by their minimum, each
  /// starting at its minimum, no spaces, fixed points omitted.
  std::string to_cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) out += ',';
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out;
  }

  /// Embeds into a larger domain: point a goes to offset + a, everything else fixed.
  Permutation shifted(std::size_t new_degree, std::size_t offset) const {
    Permutation out(new_degree);
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[offset + i] = static_cast<Point>(offset + images_[i]);
    return out;
  }

  /// Relabels points: the result maps relabel[a] to relabel[a^this].
  Permutation relabeled(std::span<const Point> relabel) const {
    Permutation out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[relabel[i]] = relabel[images_[i]];
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  void check_degree(const Permutation& rhs) const {
    if (rhs.degree() != degree()) throw DegreeMismatch(degree(), rhs.degree());
  }

  std::vector<Point> images_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

inline Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
  };
  auto malformed = [&](const std::string& why) {
    return ParseError(ParseErrorKind::malformed,
                      "malformed cycle notation at offset " + std::to_string(pos) + ": " + why);
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw malformed("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 1'000'000) throw malformed("number too large");
        ++pos;
      }
      if (pos == start) throw malformed("expected a point");
      if (value < 1 || value > degree)
        throw ParseError(ParseErrorKind::out_of_range,
                         "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      if (used[value - 1])
        throw ParseError(ParseErrorKind::repeated_point, "point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);
      skip_ws();
      if (pos >= text.size()) throw malformed("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw malformed("expected ',' or ')'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      result.images_[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  return result;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  auto c = p.to_cycles();
  return os << (c.empty() ? "()" : c);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Point v : p.images()) h = (h ^ v) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace permrel
