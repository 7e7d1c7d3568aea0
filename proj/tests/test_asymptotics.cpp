#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cubicmaps/asymptotics.hpp"
#include "cubicmaps/cubic_recursion.hpp"
#include "cubicmaps/reference.hpp"
#include "cubicmaps/rotation_counts.hpp"

using namespace cubicmaps;

namespace {

double exact_h(long n, double y) {
  const auto& j = reference_j_polynomials()[static_cast<std::size_t>(n)];
  double v = 0;
  for (long k = j.degree(); k >= 0; --k) v = v * y + j[static_cast<std::size_t>(k)].get_d();
  return v * std::pow(static_cast<double>(n), -y);
}

// The full h_n recursion in long double with every convolution term kept and
// reciprocal binomials from lgamma.
std::vector<long double> h_untruncated(double y, long N) {
  std::vector<long double> h(static_cast<std::size_t>(N + 1));
  for (long k = 1; k <= 6; ++k) h[static_cast<std::size_t>(k)] = exact_h(k, y);
  const long double J1 = h[1], J2 = h[2] * std::pow(2.0L, static_cast<long double>(y));
  const long double Y = y;
  for (long n = 7; n <= N; ++n) {
    const long double dn = n, c = 3 * dn + 2, base = 9 * dn * (dn * dn - 1);
    auto ratio = [&](long double a) { return std::pow(a / dn, Y); };
    long double v = 2 * c * Y / (3 * dn * (dn + 1)) * ratio(dn - 1) * h[static_cast<std::size_t>(n - 1)];
    v += ((9 * dn * dn - 4) / (9 * (dn * dn - 1)) + 4 * c * Y * Y / base) * ratio(dn - 2) *
         h[static_cast<std::size_t>(n - 2)];
    v += 2 * c / (base * (dn - 2)) * ratio(dn - 3) * J1 * h[static_cast<std::size_t>(n - 3)];
    v += 4 * c / (base * (dn - 2) * (dn - 3)) * ratio(dn - 4) * J2 * h[static_cast<std::size_t>(n - 4)];
    long double sum = 0;
    for (long k = 3; k <= n - 5; ++k) {
      const long double m = n - 2;
      const long double inv_binom = std::exp(std::lgamma(static_cast<long double>(k) + 1) +
                                             std::lgamma(m - k + 1) - std::lgamma(m + 1));
      sum += inv_binom * std::pow(static_cast<long double>(k) * (m - k) / dn, Y) * h[static_cast<std::size_t>(k)] *
             h[static_cast<std::size_t>(n - 2 - k)];
    }
    v += c / base * sum;
    h[static_cast<std::size_t>(n)] = v;
  }
  return h;
}

}  // namespace

TEST_CASE("small h_n values") {
  CHECK(h_sequence(1.0, 7)[1] == doctest::Approx(25.0 / 6).epsilon(1e-15));
  CHECK(h_sequence(0.0, 7)[2] == 0);
  CHECK(h_sequence(1.0, 7)[2] == doctest::Approx(10.0 / 3).epsilon(1e-15));
  CHECK(h_sequence(2.0, 7)[2] == doctest::Approx(156.0 / 9).epsilon(1e-15));
}

TEST_CASE("floating seeds agree with the exact polynomials") {
  for (double y : uniform_grid(0, 2, 0.05)) {
    const auto seq = h_sequence(y, 7);
    for (long k = 1; k <= 6; ++k) {
      const double e = exact_h(k, y);
      CHECK(std::fabs(seq[k] - e) <= 1e-12 * std::fabs(e));
    }
  }
}

TEST_CASE("h_n from the recursion matches exact J_n through n=40") {
  const HTable t = build_h_table(40);
  for (double y : {0.25, 1.0, 1.75}) {
    const auto seq = h_sequence(y, 40);
    for (long n = 7; n <= 40; ++n) {
      const auto j = j_polynomial(t, n);
      double v = 0;
      for (long k = j.degree(); k >= 0; --k) v = v * y + j[static_cast<std::size_t>(k)].get_d();
      v *= std::pow(static_cast<double>(n), -y);
      CHECK(seq[n] == doctest::Approx(v).epsilon(1e-12));
    }
  }
}

TEST_CASE("tail cut in the convolution loses nothing visible") {
  for (double y : {0.05, 0.5, 1.0, 1.5, 2.0}) {
    const long N = 1500;
    const auto fast = h_sequence(y, N);
    const auto full = h_untruncated(y, N);
    double worst = 0;
    for (long n = 1; n <= N; ++n) {
      const double ref = static_cast<double>(full[static_cast<std::size_t>(n)]);
      if (ref != 0) worst = std::max(worst, std::fabs(fast[n] / ref - 1));
    }
    CAPTURE(y);
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("y outside [0,2] is rejected") {
  CHECK_THROWS_AS(h_sequence(2.5, 10), std::domain_error);
  CHECK_THROWS_AS(h_sequence(-0.1, 10), std::domain_error);
  CHECK_THROWS_AS(estimate_K(2.0, 100), std::domain_error);
  CHECK_THROWS_AS(estimate_K(1.0, 10), std::invalid_argument);
}

TEST_CASE("K(1) = 9/pi") {
  const KEstimate k = estimate_K(1.0, 100000);
  CHECK(std::fabs(k.value() - 9 / std::numbers::pi) < 1e-3);
  CHECK(k.converged);
  CHECK(std::fabs(k.raw - 9 / std::numbers::pi) < 1e-3);
}

TEST_CASE("error indicator shrinks like 1/N") {
  for (double y : {0.5, 1.0, 1.5}) {
    double prev = 0;
    for (long N : {2000L, 4000L, 8000L, 16000L}) {
      const KEstimate k = estimate_K(y, N);
      CAPTURE(y);
      CAPTURE(N);
      if (prev > 0) {
        CHECK(k.error_indicator < prev);
        CHECK(k.error_indicator / prev == doctest::Approx(0.5).epsilon(0.1));
      }
      prev = k.error_indicator;
    }
  }
}

TEST_CASE("K regression anchors") {
  // Recorded from the first verified run at N = 100000.
  CHECK(estimate_K(0.5, 100000).value() == doctest::Approx(0.659845220363).epsilon(1e-9));
  CHECK(estimate_K(1.5, 100000).value() == doctest::Approx(7.91814264584).epsilon(1e-9));
}

TEST_CASE("small-threshold runs are flagged, not thrown") {
  const KEstimate k = estimate_K(1.0, 100, 1e-9);
  CHECK_FALSE(k.converged);
  CHECK(k.error_indicator > 1e-9);
}

TEST_CASE("KEstimator memoizes") {
  KEstimator k(2000);
  const double a = k(1.0);
  CHECK(k(1.0) == a);
  CHECK(k.cache().size() == 1);
  CHECK(a == estimate_K(1.0, 2000).value());
}

TEST_CASE("total cubic asymptotics") {
  CHECK(total_cubic_asym(1) == doctest::Approx(18 / std::numbers::pi).epsilon(1e-14));
  CHECK(total_cubic_asym(1) == doctest::Approx(5.7296).epsilon(1e-4));
  for (long n : {10L, 50L, 1000L, 10000L}) {
    const double dn = static_cast<double>(n);
    const double stirling = 1 / (12 * dn) - 1 / (360 * dn * dn * dn) + 1 / (1260 * std::pow(dn, 5));
    const double diff = log_total_cubic_asym(n) - log_total_cubic_asym_stirling(n);
    CHECK(std::fabs(diff - stirling) < 1e-10);
  }
  const double r100 = ratio_to_asym(cubic_maps_exact(100), log_total_cubic_asym(100));
  const double r200 = ratio_to_asym(cubic_maps_exact(200), log_total_cubic_asym(200));
  CHECK(std::fabs(r200 - 1) < std::fabs(r100 - 1));
  CHECK(std::isfinite(log_total_cubic_asym(10000)));
}

TEST_CASE("high-genus window") {
  const KProvider two = [](double) { return 2.0; };
  CHECK_THROWS_AS(log_high_genus_asym(300, 0, two), WindowError);
  try {
    log_high_genus_asym(300, 0, two);
  } catch (const WindowError& e) {
    CHECK(e.ratio == doctest::Approx(300 / std::log(300.0)));
  }
  CHECK_THROWS_AS(log_high_genus_asym(300, 150, two), WindowError);
  CHECK_THROWS_AS(log_high_genus_asym(300, 147, two, 1.5), std::invalid_argument);
  CHECK(std::isfinite(log_high_genus_asym(10000, 4996, two)));
}

TEST_CASE("high-genus formula against a direct evaluation") {
  double seen_y = -1;
  const KProvider k = [&](double y) {
    seen_y = y;
    return 2.0;
  };
  const long n = 20;
  const double ln_n = std::log(20.0);
  for (long g : {8L, 9L}) {
    const double f = static_cast<double>(n - 2 * g);
    double fact_f = 1;
    for (int i = 2; i <= static_cast<int>(f); ++i) fact_f *= i;
    double fact_n1 = 1;
    for (int i = 2; i < n; ++i) fact_n1 *= i;
    const double direct = std::sqrt(2.0) / 3 * 2.0 * std::pow(ln_n / f, 2) * std::pow(6.0, 20) * fact_n1 / fact_f *
                          std::pow(ln_n, f);
    CHECK(high_genus_asym(n, g, k) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(seen_y == doctest::Approx(f / ln_n));
  }
}

TEST_CASE("Lemma 1 bounds") {
  const auto grid = uniform_grid(0, 2, 0.05);
  CHECK(grid.size() == 41);
  CHECK(grid.back() == 2.0);
  const auto report = lemma1_check(1000, grid);
  CHECK(report.ok());
  CHECK(report.checked == 41 * 999);
  CHECK(report.max_h <= 9 * report.argmax_n);
  CHECK(report.max_h <= std::exp(10 - 10.0 / static_cast<double>(report.argmax_n)));
  // h_n(0) = J_n(0) vanishes for even n
  const auto zero = h_sequence(0.0, 50);
  for (long n = 2; n <= 50; n += 2) CHECK(zero[n] == 0);
  for (long n = 1; n <= 50; ++n) CHECK(zero[n] >= 0);
}

TEST_CASE("sequences for several y agree with single runs") {
  const std::vector<double> ys{0.3, 1.1, 1.9};
  const auto many = h_sequences(ys, 500, 3);
  for (std::size_t i = 0; i < ys.size(); ++i) CHECK(many[i].values == h_sequence(ys[i], 500).values);
}
