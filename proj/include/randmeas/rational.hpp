#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace randmeas {

// Exact arithmetic for the moment recurrences.
using Rational = boost::multiprecision::cpp_rational;

// Exact binary value of a double (every finite double is rational).
Rational rational_from_double(double x);

double to_double(const Rational& r);

// "p/q", or just "p" for integers.
std::string rational_to_string(const Rational& r);

// Accepts "p/q", integers and decimal literals ("0.25").
Rational parse_rational(const std::string& text);

// r (r-1) ... (r-k+1); the empty product (k = 0) is 1.
Rational falling_factorial(const Rational& r, int k);

Rational binomial_rational(int n, int k);

}  // namespace randmeas
