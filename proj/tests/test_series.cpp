#include <doctest.h>

#include "cubicmaps/series.hpp"

using namespace cubicmaps;

namespace {

// exp of a series with zero constant term: n e_n = sum_k k s_k e_{n-k}.
TruncatedSeries series_exp(const TruncatedSeries& s) {
  const std::size_t order = s.order();
  std::vector<Rational> e(order + 1);
  e[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<long>(k)) * s[k] * e[n - k];
    e[n] = acc / static_cast<long>(n);
  }
  return TruncatedSeries(std::move(e), order);
}

}  // namespace

TEST_CASE("series_log examples") {
  CHECK(series_log(TruncatedSeries({1}, 4)) == TruncatedSeries(4));
  CHECK(series_log(TruncatedSeries({1, 2, 12}, 2)) == TruncatedSeries({0, 2, 10}, 2));
  const TruncatedSeries exp3({1, 1, make_rational(1, 2), make_rational(1, 6)}, 3);
  CHECK(series_log(exp3) == TruncatedSeries({0, 1}, 3));
}

TEST_CASE("series_log rejects a constant term other than one") {
  CHECK_THROWS_AS(series_log(TruncatedSeries({2, 1}, 3)), std::domain_error);
  CHECK_THROWS_AS(series_log(TruncatedSeries({0, 1}, 3)), std::domain_error);
}

TEST_CASE("log inverts exp") {
  const std::vector<std::vector<Rational>> inputs = {
      {0, 1},
      {0, 3, make_rational(-1, 2), 7},
      {0, 0, 5, 0, make_rational(2, 9), -1, 4},
      {0, make_rational(1, 3), make_rational(1, 5), make_rational(1, 7), make_rational(1, 11), 13, 17, 19, 23},
  };
  for (const auto& c : inputs) {
    const TruncatedSeries s(c, 12);
    CHECK(series_log(series_exp(s)) == s);
  }
}

TEST_CASE("series arithmetic truncates to the smaller order") {
  const TruncatedSeries a({1, 1}, 3), b({1, 1}, 2);
  const auto p = a * b;
  CHECK(p.order() == 2);
  CHECK(p == TruncatedSeries({1, 2, 1}, 2));
  CHECK((a + b) == TruncatedSeries({2, 2}, 2));
  CHECK((a - a) == TruncatedSeries(3));
}
