#pragma once

// Scalars of the form q*sqrt(s), q rational, s positive rational.
// This is the only irrationality the library admits: sequence norms like
// sqrt(2^n)/n and the rescaling factors 1/sqrt(‖mu‖) all live here.
// Comparisons are exact (sign + squared magnitude) and never depend on the
// radicand being fully squarefree.

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

#include "famex/rational.hpp"

namespace famex {

class RadScalar {
 public:
  RadScalar() : q_(0), s_(1) {}
  RadScalar(const Rational& q) : q_(q), s_(1) {}          // NOLINT: implicit
  RadScalar(long long q) : q_(q), s_(1) {}                // NOLINT: implicit
  RadScalar(const Rational& q, const Rational& s) : q_(q), s_(s) {
    if (s_ <= 0) throw std::invalid_argument("RadScalar: radicand must be positive");
    reduce();
  }

  // sqrt(r) for rational r >= 0.
  static RadScalar sqrt_of(const Rational& r) {
    if (r < 0) throw std::domain_error("RadScalar: square root of negative rational");
    if (r == 0) return RadScalar();
    return RadScalar(Rational(1), r);
  }

  const Rational& q() const { return q_; }
  const Rational& s() const { return s_; }

  bool is_zero() const { return q_ == 0; }
  bool is_rational() const { return s_ == 1; }

  // Exact value of q when rational; throws otherwise.
  Rational rational_value() const {
    if (!is_rational())
      throw std::domain_error("RadScalar: value is irrational (radicand " + s_.str() + ")");
    return q_;
  }

  int sign() const { return q_ == 0 ? 0 : (q_ > 0 ? 1 : -1); }

  // q^2 * s, always rational.
  Rational square() const { return q_ * q_ * s_; }

  RadScalar operator-() const { return raw(-q_, s_); }

  RadScalar abs() const { return raw(q_ < 0 ? -q_ : q_, s_); }

  RadScalar operator*(const RadScalar& o) const { return RadScalar(q_ * o.q_, s_ * o.s_); }
  RadScalar operator*(const Rational& r) const {
    return r == 0 ? RadScalar() : raw(q_ * r, s_);
  }
  RadScalar operator/(const RadScalar& o) const {
    if (o.is_zero()) throw std::domain_error("RadScalar: division by zero");
    return RadScalar(q_ / (o.q_ * o.s_), s_ * o.s_);
  }

  // Addition stays inside the representation only for a shared radicand.
  RadScalar operator+(const RadScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (s_ != o.s_)
      throw std::domain_error("RadScalar: incompatible radicands " + s_.str() + " vs " +
                              o.s_.str());
    Rational q = q_ + o.q_;
    return q == 0 ? RadScalar() : raw(q, s_);
  }
  RadScalar operator-(const RadScalar& o) const { return *this + (-o); }

  // sqrt of a *rational* nonnegative value; 4th roots are out of domain.
  RadScalar sqrt() const {
    if (sign() < 0) throw std::domain_error("RadScalar: square root of negative value");
    return sqrt_of(rational_value());
  }

  // Total order: compare signs, then squared magnitudes.
  std::strong_ordering operator<=>(const RadScalar& o) const {
    int sa = sign(), sb = o.sign();
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    const Rational a2 = square(), b2 = o.square();
    if (a2 == b2) return std::strong_ordering::equal;
    bool lt = (a2 < b2) == (sa > 0);
    return lt ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  bool operator==(const RadScalar& o) const { return (*this <=> o) == 0; }

  // Largest integer <= value. Exact in both the rational and irrational case.
  Int floor() const {
    if (is_rational()) return rat_floor(q_);
    if (sign() < 0) return -raw(-q_, s_).ceil();
    Int t = isqrt(rat_floor(square()));
    while (Rational(t + 1) * (t + 1) <= square()) ++t;
    while (Rational(t) * t > square()) --t;
    return t;
  }
  Int ceil() const {
    if (is_rational()) return rat_ceil(q_);
    return floor() + 1;  // irrational, never an integer
  }

  double to_double() const {
    double v = famex::to_double(q_);
    if (s_ != 1) v *= std::sqrt(famex::to_double(s_));
    return v;
  }

 private:
  // Construct without re-reducing (s already in reduced form).
  static RadScalar raw(const Rational& q, const Rational& s) {
    RadScalar r;
    r.q_ = q;
    r.s_ = (q == 0) ? 1 : s;
    return r;
  }

  // Normal form: integer radicand with small square factors pulled out;
  // s == 1 exactly when the value is rational.
  void reduce() {
    if (q_ == 0) {
      s_ = 1;
      return;
    }
    // q*sqrt(a/b) = (q/b)*sqrt(a*b)
    Int radicand = numerator(s_) * denominator(s_);
    q_ /= denominator(s_);
    Int root;
    if (is_perfect_square(radicand, root)) {
      q_ *= root;
      s_ = 1;
      return;
    }
    for (Int d = 2; d <= 1000 && d * d <= radicand; ++d) {
      const Int dd = d * d;
      while (radicand % dd == 0) {
        radicand /= dd;
        q_ *= d;
      }
    }
    if (is_perfect_square(radicand, root)) {
      q_ *= root;
      s_ = 1;
      return;
    }
    s_ = Rational(radicand);
  }

  Rational q_;
  Rational s_;
};

inline RadScalar operator*(const Rational& r, const RadScalar& x) { return x * r; }

inline RadScalar rad_min(const RadScalar& a, const RadScalar& b) { return a < b ? a : b; }
inline RadScalar rad_max(const RadScalar& a, const RadScalar& b) { return a < b ? b : a; }

}  // namespace famex
