#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace eksr {

// Exact arbitrary-precision fraction. gmpxx keeps arithmetic results in
// canonical form (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

// "num/den", always with an explicit denominator ("1/1", "0/1").
std::string to_string(const Rational& r);

// Accepts "p/q" or an integer "p". Throws DomainError on malformed text or a
// zero denominator.
Rational parse_rational(std::string_view text);

// Decimal rendering for display only, truncated toward zero.
std::string to_decimal(const Rational& r, int places);

BigInt binomial(unsigned long n, unsigned long k);
BigInt pow2(unsigned long e);

// Smallest integer >= r.
BigInt ceil(const Rational& r);

}  // namespace eksr
