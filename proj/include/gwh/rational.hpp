#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gwh {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms; throws std::domain_error when d is zero.
Rational ratio(const Integer& n, const Integer& d);

Integer factorial(int n);
Integer binomial(int n, int k);

/// x^e for any integer e; throws std::domain_error for 0^e with e < 0.
Rational power(const Rational& x, int e);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace gwh
