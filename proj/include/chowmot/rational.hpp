#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "chowmot/errors.hpp"

namespace chowmot {

// Exact arithmetic over Q. GMP keeps every value in lowest terms with a
// positive denominator, so structural equality coincides with mathematical
// equality. No floating point appears anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den reduced to lowest terms. Throws DomainError when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Exact conversion. Throws DomainError when q is not an integer or does not
/// fit into 64 bits.
std::int64_t to_int64(const Rational& q);

/// binomial(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(int n, int k);

Integer factorial(int n);

/// Bernoulli number B_n (convention B_1 = -1/2), by the exact recurrence
/// sum_{k=0}^{m} binomial(m+1, k) B_k = 0.
Rational bernoulli(int n);

}  // namespace chowmot
