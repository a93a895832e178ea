#pragma once

// The algebra of clopen subsets of 2^omega, restricted to finitely many
// coordinates. A clopen is a set of binary words of a common length
// ("depth"); the canonical representative uses the minimal possible depth.
// Words are encoded as integers with the first stream bit as the most
// significant bit, so lexicographic word order equals numeric order.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "famex/rational.hpp"

namespace famex {

// Exact value num / 2^exp in lowest terms.
struct DyadicRational {
  Int num;
  unsigned exp = 0;

  DyadicRational() : num(0) {}
  DyadicRational(Int n, unsigned e) : num(std::move(n)), exp(e) {
    while (exp > 0 && num % 2 == 0) {
      num /= 2;
      --exp;
    }
  }

  Rational value() const { return Rational(num, pow2(exp)); }
  bool operator==(const DyadicRational& o) const { return num == o.num && exp == o.exp; }
};

class Clopen {
 public:
  // Depth is capped to keep expansions (cost 2^depth) desk-sized.
  static constexpr int kMaxDepth = 25;

  Clopen() = default;  // empty set

  static Clopen empty() { return Clopen(); }

  static Clopen full() {
    Clopen c;
    c.words_ = {0};
    return c;
  }

  // Canonicalizes: sorts, deduplicates, and reduces to the minimal depth at
  // which the set is a union of cylinders. Words must fit the given depth.
  static Clopen from_words(int depth, std::vector<std::uint32_t> words) {
    if (depth < 0 || depth > kMaxDepth)
      throw std::invalid_argument("Clopen: depth out of range [0," +
                                  std::to_string(kMaxDepth) + "]");
    for (std::uint32_t w : words)
      if (depth < 32 && (w >> depth) != 0)
        throw std::invalid_argument("Clopen: word does not fit depth " + std::to_string(depth));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    Clopen c;
    c.depth_ = depth;
    c.words_ = std::move(words);
    c.reduce();
    return c;
  }

  int depth() const { return depth_; }
  const std::vector<std::uint32_t>& words() const { return words_; }

  bool is_empty() const { return words_.empty(); }
  bool is_full() const { return depth_ == 0 && words_.size() == 1; }

  std::uint64_t word_count() const { return words_.size(); }

  // All words of the set expanded to depth d >= depth().
  std::vector<std::uint32_t> expand_to(int d) const {
    if (d < depth_ || d > kMaxDepth)
      throw std::invalid_argument("Clopen: bad expansion depth");
    const int shift = d - depth_;
    std::vector<std::uint32_t> out;
    out.reserve(words_.size() << shift);
    for (std::uint32_t w : words_) {
      const std::uint32_t base = w << shift;
      for (std::uint32_t suffix = 0; suffix < (1u << shift); ++suffix)
        out.push_back(base | suffix);
    }
    return out;
  }

  bool contains_word(std::uint32_t w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
  }

  bool operator==(const Clopen& o) const {
    return depth_ == o.depth_ && words_ == o.words_;
  }

 private:
  // Merge sibling pairs until blocked; each successful level lowers the depth
  // by one, and a clopen representable at depth e is representable at every
  // depth above e, so the greedy loop stops exactly at the minimal depth.
  void reduce() {
    while (depth_ > 0) {
      if (words_.size() % 2 != 0) return;
      for (std::size_t i = 0; i < words_.size(); i += 2)
        if ((words_[i] & 1u) != 0 || words_[i + 1] != (words_[i] | 1u)) return;
      for (std::size_t i = 0; i < words_.size(); i += 2) words_[i / 2] = words_[i] >> 1;
      words_.resize(words_.size() / 2);
      --depth_;
    }
  }

  int depth_ = 0;
  std::vector<std::uint32_t> words_;  // sorted, unique, each < 2^depth
};

namespace detail {
inline int common_depth(const Clopen& a, const Clopen& b) {
  return std::max(a.depth(), b.depth());
}
}  // namespace detail

inline Clopen meet(const Clopen& a, const Clopen& b) {
  const int d = detail::common_depth(a, b);
  auto wa = a.expand_to(d), wb = b.expand_to(d);
  std::vector<std::uint32_t> out;
  std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(out));
  return Clopen::from_words(d, std::move(out));
}

inline Clopen join(const Clopen& a, const Clopen& b) {
  const int d = detail::common_depth(a, b);
  auto wa = a.expand_to(d), wb = b.expand_to(d);
  std::vector<std::uint32_t> out;
  std::set_union(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(out));
  return Clopen::from_words(d, std::move(out));
}

inline Clopen complement(const Clopen& a) {
  const int d = a.depth();
  std::vector<std::uint32_t> out;
  out.reserve((std::size_t{1} << d) - a.words().size());
  auto it = a.words().begin();
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << d); ++w) {
    if (it != a.words().end() && *it == w) {
      ++it;
      continue;
    }
    out.push_back(static_cast<std::uint32_t>(w));
  }
  return Clopen::from_words(d, std::move(out));
}

inline Clopen diff(const Clopen& a, const Clopen& b) {
  const int d = detail::common_depth(a, b);
  auto wa = a.expand_to(d), wb = b.expand_to(d);
  std::vector<std::uint32_t> out;
  std::set_difference(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(out));
  return Clopen::from_words(d, std::move(out));
}

// a <= b in the algebra order, equivalently diff(a, b) empty.
inline bool leq(const Clopen& a, const Clopen& b) {
  const int d = detail::common_depth(a, b);
  auto wa = a.expand_to(d), wb = b.expand_to(d);
  return std::includes(wb.begin(), wb.end(), wa.begin(), wa.end());
}

// Product measure: |words| / 2^depth.
inline DyadicRational lambda_measure(const Clopen& a) {
  return DyadicRational(Int(a.words().size()), static_cast<unsigned>(a.depth()));
}

}  // namespace famex
