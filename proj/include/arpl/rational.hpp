#pragma once
/**
 * @file rational.hpp
 * @brief Exact rational scalars (GMP backed) and integer helpers.
 */

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arpl {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q" and finite decimals such as "-0.25" or "1e-3".
Rational parse_rational(std::string_view text);

// "num/den", den omitted when 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

double to_double(const Rational& r);

// r^e for any integer e; r must be nonzero when e < 0.
Rational pow(const Rational& r, long e);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace arpl
