// Exact rational scalars and the coefficient traits shared by every
// algebra container in the library.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace heatwg {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("zero to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

template <class T>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational from_rational(const Rational& x) { return x; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
};

template <>
struct CoeffTraits<double> {
  static bool is_zero(double x) { return x == 0.0; }
  static double from_rational(const Rational& x) { return x.get_d(); }
  static double to_double(double x) { return x; }
  static double magnitude(double x) { return std::fabs(x); }
};

}  // namespace heatwg
