#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace clusternet {

// Exact arithmetic scalar types. Rational is always stored reduced with a
// positive denominator (the backend normalizes on every operation), so
// equality is plain structural comparison.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline BigInt to_integer(const Rational& q) { return numerator(q); }

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

// q^e for e >= 0.
Rational pow_rational(const Rational& q, int e);

BigInt binomial(int n, int k);
BigInt fibonacci(int n);

}  // namespace clusternet
