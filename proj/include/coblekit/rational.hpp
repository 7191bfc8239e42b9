#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "coblekit/error.hpp"

namespace coblekit {

using Integer = boost::multiprecision::cpp_int;

// cpp_rational keeps every value in lowest terms with a positive
// denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p/q", or "n" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  const Integer den = denominator(q);
  if (den == 1) return numerator(q).str();
  return numerator(q).str() + "/" + den.str();
}

/// Inverse of to_string; accepts an optional leading sign.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::ParseError, "bad rational '" + text + "'");
  }
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline bool is_zero(const Rational& q) { return q == 0; }

}  // namespace coblekit
