#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace galleon {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned n);

// Binomial coefficient C(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);

// n!! for n >= -1, with (-1)!! = 0!! = 1.
Integer double_factorial(long n);

// (p_1 + ... + p_k)! / (p_1! ... p_k!), built from iterated binomials.
Integer multinomial(std::span<const unsigned> parts);

// Catalan number C_n = binom(2n, n) / (n + 1).
Integer catalan(unsigned n);

Integer pow2(unsigned k);

// Least common multiple of the denominators; 1 for an empty range.
Integer common_denominator(std::span<const Rational> values);

bool is_integral(const Rational& q);

// num / den in lowest terms; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

inline std::string to_decimal(const Integer& z) { return z.get_str(10); }

std::string to_decimal(const Rational& q);

}  // namespace galleon
