#pragma once

// Finitely supported signed measures sum alpha_i * delta_{x_i} with a single
// radical scale factor. The template is shared by the Cantor algebra
// (PointT = Point, SetT = Clopen) and the finite-cofinite algebra
// (PointT = OmegaPoint, SetT = FinCofSet); set membership is resolved by an
// ADL `contains_point(set, point)` overload.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "famex/radscalar.hpp"
#include "famex/rational.hpp"

namespace famex {

template <class PointT>
struct FiniteSignedMeasure {
  // Pairwise distinct points, nonzero weights. The canonical zero measure has
  // no atoms and scale 1.
  std::vector<std::pair<PointT, Rational>> atoms;
  RadScalar scale = RadScalar(Rational(1));

  bool is_zero() const { return atoms.empty(); }
};

// Builds a measure, merging duplicate points and dropping zero weights.
// PointT needs a strict weak order consistent with equality.
template <class PointT>
FiniteSignedMeasure<PointT> make_measure(std::vector<std::pair<PointT, Rational>> atoms,
                                         RadScalar scale = RadScalar(Rational(1))) {
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<PointT, Rational>> merged;
  for (auto& [pt, w] : atoms) {
    if (!merged.empty() && merged.back().first == pt)
      merged.back().second += w;
    else
      merged.emplace_back(std::move(pt), w);
  }
  std::erase_if(merged, [](const auto& a) { return a.second == 0; });
  FiniteSignedMeasure<PointT> m;
  if (merged.empty() || scale.is_zero()) return m;
  m.atoms = std::move(merged);
  m.scale = scale;
  return m;
}

template <class PointT>
FiniteSignedMeasure<PointT> delta(PointT x) {
  return make_measure<PointT>({{std::move(x), Rational(1)}});
}

template <class PointT, class SetT>
RadScalar eval_set(const FiniteSignedMeasure<PointT>& m, const SetT& a) {
  Rational sum = 0;
  for (const auto& [pt, w] : m.atoms)
    if (contains_point(a, pt)) sum += w;
  return m.scale * sum;
}

template <class SetT>
struct SimpleFunction {
  std::vector<std::pair<Rational, SetT>> terms;  // coefficient, set
};

template <class PointT, class SetT>
RadScalar eval_simple(const FiniteSignedMeasure<PointT>& m, const SimpleFunction<SetT>& f) {
  Rational sum = 0;
  for (const auto& [coef, set] : f.terms)
    for (const auto& [pt, w] : m.atoms)
      if (contains_point(set, pt)) sum += coef * w;
  return m.scale * sum;
}

// Total variation |scale| * sum |w_i|; for finitely supported measures with
// distinct points this equals the sup over disjoint clopen pairs.
template <class PointT>
RadScalar tv_norm(const FiniteSignedMeasure<PointT>& m) {
  Rational sum = 0;
  for (const auto& [pt, w] : m.atoms) sum += w < 0 ? -w : w;
  return m.scale.abs() * sum;
}

template <class PointT>
FiniteSignedMeasure<PointT> scale_measure(const FiniteSignedMeasure<PointT>& m,
                                          const RadScalar& c) {
  if (m.is_zero() || c.is_zero()) return {};
  FiniteSignedMeasure<PointT> out = m;
  out.scale = m.scale * c;
  return out;
}

// Addition requires a shared radicand; mixing radicands is an error rather
// than a silent float fallback.
template <class PointT>
FiniteSignedMeasure<PointT> add_measures(const FiniteSignedMeasure<PointT>& a,
                                         const FiniteSignedMeasure<PointT>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.scale.s() != b.scale.s())
    throw std::domain_error("add_measures: incompatible scale radicands");
  const Rational ratio = b.scale.q() / a.scale.q();
  std::vector<std::pair<PointT, Rational>> atoms = a.atoms;
  for (const auto& [pt, w] : b.atoms) atoms.emplace_back(pt, w * ratio);
  return make_measure(std::move(atoms), a.scale);
}

template <class PointT, class SetT>
FiniteSignedMeasure<PointT> restrict(const FiniteSignedMeasure<PointT>& m, const SetT& a) {
  std::vector<std::pair<PointT, Rational>> atoms;
  for (const auto& [pt, w] : m.atoms)
    if (contains_point(a, pt)) atoms.emplace_back(pt, w);
  return make_measure(std::move(atoms), m.scale);
}

// mu / ‖mu‖: exact unit total variation.
template <class PointT>
FiniteSignedMeasure<PointT> normalize(const FiniteSignedMeasure<PointT>& m) {
  if (m.is_zero()) throw std::domain_error("normalize: zero measure");
  FiniteSignedMeasure<PointT> out = m;
  out.scale = m.scale / tv_norm(m);
  return out;
}

// mu / sqrt(‖mu‖): the Nikodym-style rescaling. ‖result‖^2 = ‖mu‖ exactly.
// Requires ‖mu‖ rational; a 4th root would leave the q*sqrt(s) domain.
template <class PointT>
FiniteSignedMeasure<PointT> nik_rescale(const FiniteSignedMeasure<PointT>& m) {
  if (m.is_zero()) throw std::domain_error("nik_rescale: zero measure");
  const RadScalar norm = tv_norm(m);
  FiniteSignedMeasure<PointT> out = m;
  out.scale = m.scale / norm.sqrt();
  return out;
}

}  // namespace famex
