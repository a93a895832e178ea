#pragma once

// Stone-space points, realized as eventually periodic 0/1 sequences so that
// equality and separation are decidable. A point is stem + period^omega; the
// canonical form uses a primitive period and the shortest stem.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "famex/cantor.hpp"

namespace famex {

class Point {
 public:
  // Both arguments over {'0','1'}; period must be nonempty.
  Point(std::string stem, std::string period)
      : stem_(std::move(stem)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("Point: empty period");
    for (char c : stem_ + period_)
      if (c != '0' && c != '1') throw std::invalid_argument("Point: bits must be 0/1");
    canonicalize();
  }

  const std::string& stem() const { return stem_; }
  const std::string& period() const { return period_; }

  int bit(std::size_t i) const {
    if (i < stem_.size()) return stem_[i] - '0';
    return period_[(i - stem_.size()) % period_.size()] - '0';
  }

  // First `depth` bits as a word (first bit most significant).
  std::uint32_t prefix_word(int depth) const {
    std::uint32_t w = 0;
    for (int i = 0; i < depth; ++i) w = (w << 1) | static_cast<std::uint32_t>(bit(i));
    return w;
  }

  // Canonical forms are unique, so representation equality is stream equality.
  bool operator==(const Point& o) const {
    return stem_ == o.stem_ && period_ == o.period_;
  }
  bool operator<(const Point& o) const {
    return std::pair(stem_, period_) < std::pair(o.stem_, o.period_);
  }

 private:
  void canonicalize() {
    // Primitive period: the shortest word whose repetition gives the period.
    for (std::size_t d = 1; d < period_.size(); ++d) {
      if (period_.size() % d != 0) continue;
      bool repeats = true;
      for (std::size_t i = d; i < period_.size() && repeats; ++i)
        repeats = period_[i] == period_[i % d];
      if (repeats) {
        period_.resize(d);
        break;
      }
    }
    // Absorb stem bits that merely repeat the tail of the period.
    while (!stem_.empty() && stem_.back() == period_.back()) {
      period_.insert(period_.begin(), period_.back());
      period_.pop_back();
      stem_.pop_back();
    }
  }

  std::string stem_;
  std::string period_;
};

// Equality decided by comparing bits out to the standard eventual-period
// bound |stem_x| + |stem_y| + lcm(|period_x|, |period_y|).
inline std::size_t equality_bound(const Point& x, const Point& y) {
  return x.stem().size() + y.stem().size() +
         std::lcm(x.period().size(), y.period().size());
}

inline bool point_equal(const Point& x, const Point& y) {
  const std::size_t bound = equality_bound(x, y);
  for (std::size_t i = 0; i < bound; ++i)
    if (x.bit(i) != y.bit(i)) return false;
  return true;
}

// Cylinder at the first differing bit: contains x, omits y.
inline Clopen separating_clopen(const Point& x, const Point& y) {
  const std::size_t bound = equality_bound(x, y);
  for (std::size_t i = 0; i < bound; ++i) {
    if (x.bit(i) != y.bit(i)) {
      const int depth = static_cast<int>(i) + 1;
      if (depth > Clopen::kMaxDepth)
        throw std::invalid_argument("separating_clopen: points agree beyond representable depth");
      return Clopen::from_words(depth, {x.prefix_word(depth)});
    }
  }
  throw std::domain_error("separating_clopen: points are equal");
}

inline bool contains_point(const Clopen& a, const Point& x) {
  return a.contains_word(x.prefix_word(a.depth()));
}

// Default experiment family: the bit stream of x_i is the base-2 digit
// sequence of i+1, least significant digit first, so streams are pairwise
// distinct and membership in shallow cylinders reads off low-order bits.
inline Point default_family_point(std::uint64_t i) {
  std::uint64_t v = i + 1;
  std::string stem;
  while (v != 0) {
    stem.push_back(v % 2 == 0 ? '0' : '1');
    v /= 2;
  }
  return Point(stem, "0");
}

}  // namespace famex
