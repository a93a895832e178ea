#pragma once

// Exact arithmetic backbone: arbitrary-precision integers and rationals.
// Everything downstream assumes these never silently round.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace famex {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int pow2(unsigned e) { return Int(1) << e; }

inline Rational rat(long long n) { return Rational(n); }
inline Rational rat(long long n, long long d) { return Rational(n, d); }

// floor(a/b) for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int rat_floor(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

inline Int rat_ceil(const Rational& r) { return -rat_floor(-r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Integer square root, rounded down. Input must be >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  return sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int& root) {
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

// ceil(sqrt(n)) in exact integer arithmetic.
inline Int ceil_sqrt(const Int& n) {
  Int r = isqrt(n);
  return r * r == n ? r : r + 1;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) { return Rational(x); }

inline Rational parse_rational(const std::string& text) {
  auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + text + "'");
  };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

inline std::string format_rational(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

}  // namespace famex
