#pragma once

// Measures over the Cantor algebra, plus the explicit clopen that attains the
// total variation norm.

#include <vector>

#include "famex/cantor.hpp"
#include "famex/measure.hpp"
#include "famex/point.hpp"

namespace famex {

using CantorMeasure = FiniteSignedMeasure<Point>;
using CantorSimple = SimpleFunction<Clopen>;

// A clopen A with |mu(A)| + |mu(complement A)| = ‖mu‖: join over positive
// atoms of the meet of separating cylinders against every negative atom, so A
// holds exactly the positive-weight part of the support.
inline Clopen tv_attaining_clopen(const CantorMeasure& m) {
  std::vector<const Point*> pos, neg;
  for (const auto& [pt, w] : m.atoms) (w > 0 ? pos : neg).push_back(&pt);
  if (neg.empty()) return pos.empty() ? Clopen::empty() : Clopen::full();
  Clopen a = Clopen::empty();
  for (const Point* p : pos) {
    Clopen cell = Clopen::full();
    for (const Point* q : neg) cell = meet(cell, separating_clopen(*p, *q));
    a = join(a, cell);
  }
  return a;
}

}  // namespace famex
