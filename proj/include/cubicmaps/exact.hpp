#pragma once

// Exact integer and rational arithmetic shared by every counting module.
//
// BigInt and Rational are GMP values. All arithmetic on Rational keeps it in
// canonical form (reduced, positive denominator); the helpers below are the
// only places that build a Rational from raw parts, and they canonicalize.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicmaps {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when a value that must be an integer (or exactly divisible) is not.
/// Always an implementation bug, never valid data.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt factorial(unsigned long n);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// num/den in canonical form. Throws std::domain_error on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt power(unsigned long base, unsigned long exponent);

/// Exact conversion of a Rational known to be an integer.
BigInt to_integer(const Rational& q);

/// a / b where b must divide a.
BigInt exact_divide(const BigInt& a, const BigInt& b);

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Decimal and "p/q" encodings. These are the only serialized forms.
std::string to_decimal(const BigInt& x);
BigInt parse_bigint(std::string_view text);
std::string to_string(const Rational& q);  // "p/q", or "p" when q == 1
Rational parse_rational(std::string_view text);

/// Natural log of a positive integer, accurate for values far beyond double range.
double log_abs(const BigInt& x);

/// Natural log of |q|, q != 0.
double log_abs(const Rational& q);

}  // namespace cubicmaps
