#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dynamo {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, always with an explicit denominator ("0/1", "3/1").
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Largest integer not exceeding r.
inline boost::multiprecision::cpp_int floor(const Rational& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);  // always positive
  cpp_int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

}  // namespace dynamo
