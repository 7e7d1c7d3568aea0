#include <doctest.h>

#include <cmath>

#include "cubicmaps/cubic_recursion.hpp"
#include "cubicmaps/rotation_counts.hpp"

using namespace cubicmaps;

TEST_CASE("bouquets") {
  CHECK(bouquet_count(1) == 1);
  CHECK(bouquet_count(2) == 3);
  CHECK(bouquet_count(3) == 15);
  // one vertex of degree 2n is the 2n-regular family with a single vertex
  for (long n = 1; n <= 4; ++n) CHECK(brute_force_census(n, 2 * n).rooted_maps == bouquet_count(n));
}

TEST_CASE("total maps") {
  CHECK(total_maps_exact(1) == 2);
  CHECK(total_maps_exact(2) == 10);
  for (long e = 1; e <= 4; ++e) {
    CAPTURE(e);
    CHECK(brute_force_census(e).rooted_maps == total_maps_exact(e));
  }
}

TEST_CASE("cubic maps") {
  CHECK(cubic_maps_exact(1) == 5);
  CHECK(cubic_maps_exact(2) == 60);
  CHECK(brute_force_census(3, 3).rooted_maps == 5);
  CHECK(regular_maps_exact({3}, 1) == 5);
  CHECK(regular_maps_with_vertices(3, 2) == 5);
  CHECK_THROWS_AS(regular_maps_with_vertices(3, 3), std::invalid_argument);
  const HTable t = build_h_table(30);
  for (long n = 1; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(cubic_maps_exact(n) == genus_distribution(t, n).total());
    CHECK(regular_maps_exact({3}, n) == cubic_maps_exact(n));
  }
}

TEST_CASE("4-regular maps against the census") {
  CHECK(brute_force_census(2, 4).rooted_maps == regular_maps_exact({4}, 1));
  CHECK(brute_force_census(4, 4).rooted_maps == regular_maps_exact({4}, 2));
  CHECK(regular_maps_with_vertices(4, 1) == regular_maps_exact({4}, 1));
}

TEST_CASE("census divisibility and limits") {
  for (long e = 1; e <= 4; ++e) {
    const auto c = brute_force_census(e);
    const BigInt group = power(2, static_cast<unsigned long>(e - 1)) * factorial(static_cast<unsigned long>(e - 1));
    CHECK(mpz_divisible_p(c.transitive.get_mpz_t(), group.get_mpz_t()));
    CHECK(c.transitive == c.rooted_maps * group);
  }
  CHECK_THROWS_AS(brute_force_census(kMaxCensusEdges + 1), CensusSizeError);
  CHECK_THROWS_AS(brute_force_census(0), std::invalid_argument);
}

TEST_CASE("asymptotic forms") {
  CHECK(regular_maps_asym({3}, 1) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(total_maps_asym(2) == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(ratio_to_asym(total_maps_exact(2), log_total_maps_asym(2)) == doctest::Approx(10.0 / 12));
  CHECK_THROWS(log_regular_maps_asym({2}, 3));
  CHECK(std::isfinite(log_total_maps_asym(10000)));
  CHECK(std::isfinite(log_regular_maps_asym({5}, 10000)));
}

TEST_CASE("exact over asymptotic approaches 1") {
  const double r200 = ratio_to_asym(cubic_maps_exact(200), log_regular_maps_asym({3}, 200));
  CHECK(std::fabs(r200 - 1) < 0.02);

  for (long degree : {3L, 4L, 5L, 6L}) {
    const RegularFamily fam{degree};
    double prev = 0;
    for (long s : {10L, 20L, 40L, 80L}) {
      const double dist = std::fabs(ratio_to_asym(regular_maps_exact(fam, s), log_regular_maps_asym(fam, s)) - 1);
      CAPTURE(degree);
      CAPTURE(s);
      if (prev > 0) CHECK(dist < prev);
      prev = dist;
    }
  }
  double prev = 0;
  for (long n : {10L, 20L, 40L, 80L}) {
    const double dist = std::fabs(ratio_to_asym(total_maps_exact(n), log_total_maps_asym(n)) - 1);
    if (prev > 0) CHECK(dist < prev);
    prev = dist;
  }
}

TEST_CASE("EGF coefficients grow super-exponentially") {
  auto check = [](const TruncatedSeries& s) {
    double prev_ratio = 0;
    for (std::size_t k = 2; k <= s.order(); ++k) {
      const double ratio = Rational(s[k] / s[k - 1]).get_d();
      CHECK(ratio > prev_ratio);
      prev_ratio = ratio;
    }
    CHECK(prev_ratio > 10 * Rational(s[2] / s[1]).get_d());
  };
  check(all_maps_egf(40));
  check(regular_maps_egf({3}, 40));
  check(regular_maps_egf({4}, 40));
}
