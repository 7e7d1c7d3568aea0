#include "cubicmaps/exact.hpp"

#include <cmath>
#include <numbers>

namespace cubicmaps {

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt power(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (is_zero(den)) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt to_integer(const Rational& q) {
  if (q.get_den() != 1) {
    throw IntegralityError("expected an integer, got " + to_string(q));
  }
  return q.get_num();
}

BigInt exact_divide(const BigInt& a, const BigInt& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw IntegralityError(to_decimal(b) + " does not divide " + to_decimal(a));
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == digits_from) throw ParseError("empty integer literal");
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer literal '" + s + "'");
  }
  BigInt out(s, 10);
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return to_decimal(q.get_num());
  return to_decimal(q.get_num()) + "/" + to_decimal(q.get_den());
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (sgn(den) <= 0) throw ParseError("rational denominator must be positive");
  Rational q = make_rational(parse_bigint(text.substr(0, slash)), den);
  return q;
}

double log_abs(const BigInt& x) {
  if (is_zero(x)) throw std::domain_error("log of zero");
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::numbers::ln2;
}

double log_abs(const Rational& q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

}  // namespace cubicmaps
