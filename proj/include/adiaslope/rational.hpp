#ifndef ADIASLOPE_RATIONAL_HPP
#define ADIASLOPE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace adiaslope {

using Integer = boost::multiprecision::cpp_int;
// expression templates off: plain value semantics for ring coefficients
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Parses "p/q" or a plain integer string. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0.
std::string format_rational(const Rational& x);

Integer binomial(long n, long k);
Integer factorial(long n);

Rational rational_pow(const Rational& base, long exponent);

}  // namespace adiaslope

#endif
