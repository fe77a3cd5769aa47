#include "randmeas/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace randmeas {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: not finite");
  return Rational(x);  // exact: doubles are dyadic rationals
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument("parse_rational: malformed fraction");
    boost::multiprecision::cpp_int n(num);
    boost::multiprecision::cpp_int d(den);
    return Rational(n, d);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    return Rational(boost::multiprecision::cpp_int(text));
  }
  // Decimal literal: digits after the dot give the power-of-ten denominator.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+") {
    throw std::invalid_argument("parse_rational: malformed decimal");
  }
  boost::multiprecision::cpp_int num(digits);
  boost::multiprecision::cpp_int den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  return Rational(num, den);
}

Rational falling_factorial(const Rational& r, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative length");
  Rational out = 1;
  for (int j = 0; j < k; ++j) out *= (r - j);
  return out;
}

Rational binomial_rational(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("binomial_rational: out of range");
  Rational out = 1;
  for (int j = 1; j <= k; ++j) {
    out *= (n - k + j);
    out /= j;
  }
  return out;
}

}  // namespace randmeas
