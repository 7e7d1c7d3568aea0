#include <doctest.h>

#include <random>

#include "cubicmaps/exact.hpp"
#include "cubicmaps/polynomial.hpp"

using namespace cubicmaps;

namespace {

BigInt factorial_oracle(unsigned long n) {
  BigInt acc = 1;
  for (unsigned long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

std::vector<std::vector<BigInt>> pascal(long rows) {
  std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(rows + 1));
  for (long n = 0; n <= rows; ++n) {
    auto& r = t[static_cast<std::size_t>(n)];
    r.assign(static_cast<std::size_t>(n + 1), 1);
    for (long k = 1; k < n; ++k) {
      r[static_cast<std::size_t>(k)] =
          t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
          t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
  }
  return t;
}

IntPolynomial random_poly(std::mt19937_64& rng, int max_len, bool allow_negative) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<long> coeff(allow_negative ? -1000000 : 0, 1000000);
  std::vector<BigInt> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) {
    x = coeff(rng);
    x *= x;  // spread magnitudes a little
    if (allow_negative && coeff(rng) < 0) x = -x;
  }
  return IntPolynomial(std::move(c));
}

constexpr MulStrategy kAll[] = {MulStrategy::schoolbook, MulStrategy::karatsuba, MulStrategy::kronecker};

}  // namespace

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == parse_bigint("2432902008176640000"));
  for (unsigned long n = 0; n <= 120; ++n) CHECK(factorial(n) == factorial_oracle(n));
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);

  const auto t = pascal(60);
  for (long n = 0; n <= 60; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
      CHECK(binomial(n, k) == binomial(n, n - k));
    }
  }
}

TEST_CASE("rationals are canonical") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int i = 0; i < 500; ++i) {
    long p = d(rng), q = d(rng);
    if (q == 0) continue;
    const Rational r = make_rational(p, q) * make_rational(q + 1000, 3) - make_rational(1, 6);
    CHECK(sgn(r.get_den()) > 0);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    CHECK(g == 1);
  }
  CHECK(to_string(make_rational(-4, -6)) == "2/3");
  CHECK(to_string(make_rational(6, -3)) == "-2");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("decimal and rational round trips") {
  const BigInt big = factorial(80) * -3 + 17;
  CHECK(parse_bigint(to_decimal(big)) == big);
  CHECK(parse_rational(to_string(make_rational(big, factorial(30)))) == make_rational(big, factorial(30)));
  CHECK_THROWS_AS(parse_bigint("12a"), ParseError);
  CHECK_THROWS_AS(parse_bigint(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("exact division and integer conversion") {
  CHECK(exact_divide(120, 24) == 5);
  CHECK_THROWS_AS(exact_divide(121, 24), IntegralityError);
  CHECK(to_integer(make_rational(10, 5)) == 2);
  CHECK_THROWS_AS(to_integer(make_rational(1, 2)), IntegralityError);
  CHECK(power(6, 3) == 216);
}

TEST_CASE("log_abs matches double logarithms and survives huge values") {
  CHECK(log_abs(BigInt(1000)) == doctest::Approx(std::log(1000.0)).epsilon(1e-15));
  CHECK(log_abs(BigInt(-1000)) == doctest::Approx(std::log(1000.0)).epsilon(1e-15));
  CHECK(log_abs(factorial(3000)) == doctest::Approx(std::lgamma(3001.0)).epsilon(1e-13));
  CHECK(log_abs(make_rational(1, 8)) == doctest::Approx(-std::log(8.0)).epsilon(1e-15));
}

TEST_CASE("poly_mul examples") {
  const IntPolynomial a{1, 1}, b{1, -1};
  for (auto s : kAll) {
    CHECK(poly_mul(a, b, s) == IntPolynomial{1, 0, -1});
    CHECK(poly_mul(a, IntPolynomial{}, s).is_zero());
    CHECK(poly_mul(IntPolynomial{}, IntPolynomial{}, s).is_zero());
  }
  const DensePolynomial h1{make_rational(20, 6), make_rational(5, 6)};
  const DensePolynomial h2{make_rational(32, 9), make_rational(28, 9)};
  const DensePolynomial expected{make_rational(640, 54), make_rational(720, 54), make_rational(140, 54)};
  for (auto s : kAll) CHECK(poly_mul(h1, h2, s) == expected);
}

TEST_CASE("poly_mul strategies agree and are commutative and associative") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 60; ++trial) {
    const bool neg = trial % 3 == 0;
    const auto a = random_poly(rng, 40, neg), b = random_poly(rng, 40, neg), c = random_poly(rng, 15, neg);
    const auto ref = poly_mul(a, b, MulStrategy::schoolbook);
    for (auto s : kAll) {
      CHECK(poly_mul(a, b, s) == ref);
      CHECK(poly_mul(b, a, s) == ref);
      CHECK(poly_mul(poly_mul(a, b, s), c, s) == poly_mul(a, poly_mul(b, c, s), s));
    }
  }
}

TEST_CASE("polynomial basics") {
  const DensePolynomial p{1, 2, 3};
  CHECK(p.degree() == 2);
  CHECK(DensePolynomial{0, 0}.degree() == -1);
  CHECK(p.evaluate(2) == 17);
  CHECK(p.derivative() == DensePolynomial{2, 6});
  CHECK(p[7] == 0);
  CHECK(p.coefficient_sum() == 6);
  CHECK(parse_mul_strategy("karatsuba") == MulStrategy::karatsuba);
  CHECK_THROWS(parse_mul_strategy("fft"));
}
