#include "adiaslope/rational.hpp"

#include <stdexcept>

namespace adiaslope {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in rational: " + text);
    }
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) {
    return numerator(x).str();
  }
  return numerator(x).str() + "/" + denominator(x).str();
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  Integer result = 1;
  for (long i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

Integer factorial(long n) {
  Integer result = 1;
  for (long i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw std::invalid_argument("zero to a negative power");
    }
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  long e = exponent;
  while (e > 0) {
    if (e & 1) {
      result *= b;
    }
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace adiaslope
