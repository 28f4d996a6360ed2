#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qbounds {

using Integer = mpz_class;
/// Exact rational number. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator.
using Rational = mpq_class;

/// num/den in lowest terms. Throws ParameterError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "p/q" or "-p/q". Throws ParameterError on malformed input.
Rational parse_rational(std::string_view text);

/// Renders "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

/// base^exp for exp >= 0.
Integer ipow(std::int64_t base, unsigned exp);

/// 2^exp for any integer exp, as an exact rational.
Rational pow2(std::int64_t exp);

/// Largest m with 2^m <= r. Requires r > 0.
std::int64_t floor_log2(const Rational& r);

/// Generalised binomial x(x-1)...(x-j+1)/j! for rational x.
Rational falling_binomial(const Rational& x, unsigned j);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace qbounds
