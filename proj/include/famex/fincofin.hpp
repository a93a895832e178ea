#pragma once

// The finite-cofinite algebra on omega, whose Stone space is omega + 1: the
// simplest algebra carrying a convergent sequence. Its delta-difference
// measures are the exactly certifiable weak*-null family used by the
// rescaling pipeline.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "famex/measure.hpp"

namespace famex {

struct FinCofSet {
  std::vector<std::uint64_t> base;  // sorted, unique
  bool cofinite = false;            // element = base, or omega \ base

  static FinCofSet finite(std::vector<std::uint64_t> elems) {
    return make(std::move(elems), false);
  }
  static FinCofSet cofinite_of(std::vector<std::uint64_t> excluded) {
    return make(std::move(excluded), true);
  }
  static FinCofSet whole() { return cofinite_of({}); }

  bool operator==(const FinCofSet& o) const {
    return cofinite == o.cofinite && base == o.base;
  }

 private:
  static FinCofSet make(std::vector<std::uint64_t> elems, bool cof) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    FinCofSet s;
    s.base = std::move(elems);
    s.cofinite = cof;
    return s;
  }
};

struct OmegaPoint {
  bool infinite = false;
  std::uint64_t n = 0;

  static OmegaPoint nat(std::uint64_t k) { return {false, k}; }
  static OmegaPoint infinity() { return {true, 0}; }

  bool operator==(const OmegaPoint& o) const {
    return infinite == o.infinite && (infinite || n == o.n);
  }
  bool operator<(const OmegaPoint& o) const {
    if (infinite != o.infinite) return !infinite;  // naturals before infinity
    return !infinite && n < o.n;
  }
};

inline bool point_equal(const OmegaPoint& x, const OmegaPoint& y) { return x == y; }

inline bool contains_point(const FinCofSet& a, const OmegaPoint& x) {
  if (x.infinite) return a.cofinite;
  const bool in_base = std::binary_search(a.base.begin(), a.base.end(), x.n);
  return a.cofinite ? !in_base : in_base;
}

inline FinCofSet fc_complement(const FinCofSet& a) {
  FinCofSet out = a;
  out.cofinite = !a.cofinite;
  return out;
}

inline FinCofSet fc_meet(const FinCofSet& a, const FinCofSet& b) {
  std::vector<std::uint64_t> out;
  if (!a.cofinite && !b.cofinite) {
    std::set_intersection(a.base.begin(), a.base.end(), b.base.begin(), b.base.end(),
                          std::back_inserter(out));
    return FinCofSet::finite(std::move(out));
  }
  if (a.cofinite && b.cofinite) {
    std::set_union(a.base.begin(), a.base.end(), b.base.begin(), b.base.end(),
                   std::back_inserter(out));
    return FinCofSet::cofinite_of(std::move(out));
  }
  const FinCofSet& fin = a.cofinite ? b : a;
  const FinCofSet& cof = a.cofinite ? a : b;
  std::set_difference(fin.base.begin(), fin.base.end(), cof.base.begin(), cof.base.end(),
                      std::back_inserter(out));
  return FinCofSet::finite(std::move(out));
}

inline FinCofSet fc_join(const FinCofSet& a, const FinCofSet& b) {
  return fc_complement(fc_meet(fc_complement(a), fc_complement(b)));
}

using OmegaMeasure = FiniteSignedMeasure<OmegaPoint>;
using FinCofSimple = SimpleFunction<FinCofSet>;

// mu_n = (delta_{2n} - delta_{2n+1}) / 2: unit norm, two-point support.
inline OmegaMeasure delta_difference(std::uint64_t n) {
  return make_measure<OmegaPoint>({{OmegaPoint::nat(2 * n), Rational(1, 2)},
                                   {OmegaPoint::nat(2 * n + 1), Rational(-1, 2)}});
}

// Least N (of the form below) with delta_difference(n)(A) = 0 for all n >= N:
// once 2n exceeds max(base), the pair {2n, 2n+1} meets A in 0 or 2 points.
inline std::uint64_t vanish_bound(const FinCofSet& a) {
  if (a.base.empty()) return 0;
  return a.base.back() / 2 + 1;
}

inline std::uint64_t simple_vanish_bound(const FinCofSimple& f) {
  std::uint64_t bound = 0;
  for (const auto& [coef, set] : f.terms) bound = std::max(bound, vanish_bound(set));
  return bound;
}

}  // namespace famex
