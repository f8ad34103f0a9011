#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace treehopf {

// Exact scalars of the base field. cpp_rational keeps every value reduced
// with a positive denominator, so value equality is structural equality.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct DegreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p/q" with q omitted when 1.
inline std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational", 0);
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + s + "'", 0);
  }
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;
  Rational b = base;
  int k = e;
  if (k < 0) {
    if (base == 0) throw std::domain_error("0^negative");
    b = 1 / base;
    k = -k;
  }
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

}  // namespace treehopf
