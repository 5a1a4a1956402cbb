#ifndef GHAM_RATIONAL_HPP
#define GHAM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace gham {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always normalized: lowest terms, positive
// denominator. cpp_rational maintains exactly that representation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Parses "9/16", "-3", "0.5625". Decimal strings are converted exactly
// (0.2 -> 1/5). Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Lowest-terms fraction string: "9/16", "3", "-1/2". Integers carry no "/1".
std::string format_rational(const Rational& r);

// Decimal with fixed digits after the point, rounded half away from zero.
std::string format_decimal(const Rational& r, int digits);

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items);

}  // namespace gham

#endif
