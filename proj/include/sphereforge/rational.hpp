#ifndef SPHEREFORGE_RATIONAL_HPP
#define SPHEREFORGE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sphereforge {

// Exact arbitrary-precision arithmetic. cpp_rational keeps gcd-reduced
// numerator/denominator with positive denominator, which is exactly the
// canonical form we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "n" or "n/d" with optional leading '-'.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer num(s.substr(0, slash));
  Integer den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(num, den);
}

}  // namespace sphereforge

#endif
