#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace leechcert {

/** Exact rational number, always canonical (lowest terms, positive denominator). */
using Rational = mpq_class;
using BigInt = mpz_class;

/** Builds num/den in canonical form. Throws InvalidParameters on a zero denominator. */
Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/** Parses "p/q" or an integer. No decimal or floating-point syntax is accepted. */
Rational parse_rational(std::string_view text);

/** Canonical text: "p/q", or "p" when the denominator is 1. */
std::string to_string(const Rational& value);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/** Floor of a rational as an arbitrary-precision integer. */
BigInt floor(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace leechcert
