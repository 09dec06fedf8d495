#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace arraudit {

/// Arbitrary-precision signed integer. Every count, degree and multiplicity
/// in the library uses this type; nothing overflows.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always in lowest terms with positive
/// denominator (zero is 0/1). Arithmetic and comparison are exact.
using Rational = boost::multiprecision::cpp_rational;

/// Build num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" when q != 1, plain "p" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Parse "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
/// on anything else (including "p/0").
Rational parse_rational(std::string_view text);

/// Parse a decimal integer with optional leading '-'.
Integer parse_integer(std::string_view text);

/// n(n-1)/2 for n >= 0; the number of unordered pairs. C(0,2) = C(1,2) = 0.
Integer choose2(const Integer& n);

} // namespace arraudit
