#include "cubicmaps/verify.hpp"

#include <cmath>
#include <sstream>

#include "cubicmaps/asymptotics.hpp"
#include "cubicmaps/cubic_recursion.hpp"
#include "cubicmaps/reference.hpp"
#include "cubicmaps/rotation_counts.hpp"
#include "cubicmaps/statistics.hpp"

namespace cubicmaps {

namespace {

std::string le(long n) { return "n≤" + std::to_string(n); }

}  // namespace

std::vector<CheckResult> run_verification(const VerifyConfig& config) {
  std::vector<CheckResult> out;
  auto record = [&](std::string name, auto&& check) {
    CheckResult r{std::move(name), false, ""};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };

  const long max_n = std::max(config.max_n, 6L);
  BuildOptions options;
  options.workers = config.workers;
  const HTable table = build_h_table(max_n, options);

  record("golden polynomials J1..J6", [&]() -> std::string {
    for (long n = 1; n <= 6; ++n) {
      if (!(j_polynomial(table, n) == reference_j_polynomials()[static_cast<std::size_t>(n)])) {
        return "J_" + std::to_string(n) + " differs";
      }
    }
    return "";
  });

  record("genus rows n=1,2", [&]() -> std::string {
    const auto r1 = genus_distribution(table, 1).counts, r2 = genus_distribution(table, 2).counts;
    if (r1 != std::vector<BigInt>{4, 1}) return "row 1 differs";
    if (r2 != std::vector<BigInt>{32, 28}) return "row 2 differs";
    return "";
  });

  record("cubic aggregate " + le(config.max_n), [&]() -> std::string {
    for (long n = 1; n <= config.max_n; ++n) {
      if (genus_distribution(table, n).total() != cubic_maps_exact(n)) {
        return "mismatch at n=" + std::to_string(n);
      }
    }
    return "";
  });

  record("polynomial recursion " + le(config.max_n), [&]() -> std::string {
    const auto polys = genus_polynomials_recursive(config.max_n);
    for (long n = 0; n <= config.max_n; ++n) {
      if (!(polys[static_cast<std::size_t>(n)] == genus_polynomial(table, n))) {
        return "mismatch at n=" + std::to_string(n);
      }
    }
    return "";
  });

  record("integrality " + le(max_n), [&]() -> std::string {
    for (long n = 1; n <= max_n; ++n) {
      for (const auto& h : table.row(n)) {
        if (!mpz_divisible_ui_p(h.get_mpz_t(), static_cast<unsigned long>(3 * n + 2))) {
          return "row " + std::to_string(n);
        }
      }
    }
    return "";
  });

  record("brute-force oracle n_edges≤" + std::to_string(config.census_edges), [&]() -> std::string {
    for (long e = 1; e <= config.census_edges; ++e) {
      if (brute_force_census(e).rooted_maps != total_maps_exact(e)) {
        return "total maps differ at " + std::to_string(e) + " edges";
      }
    }
    if (config.census_edges >= 3 && brute_force_census(3, 3).rooted_maps != cubic_maps_exact(1)) {
      return "cubic census differs";
    }
    return "";
  });

  record("Lemma1 bounds " + le(config.lemma_n), [&]() -> std::string {
    const auto grid = uniform_grid(0, 2, config.lemma_step);
    const auto report = lemma1_check(config.lemma_n, grid, config.workers);
    if (report.ok()) return "";
    std::ostringstream s;
    const auto& v = report.violations.front();
    s << report.violations.size() << " violations, first h_" << v.n << "(" << v.y << ") = " << v.h
      << " > " << v.which;
    return s.str();
  });

  record("linear identities " + le(config.max_n), [&]() -> std::string {
    for (long n = 1; n <= config.max_n; ++n) {
      const auto g = genus_stats(genus_distribution(table, n));
      const auto f = region_stats(face_distribution(table, n));
      if (f.mean != n + 2 - 2 * g.mean || f.variance != 4 * g.variance) {
        return "identity fails at n=" + std::to_string(n);
      }
    }
    return "";
  });

  record("moment jets " + le(config.max_n), [&]() -> std::string {
    const auto jets = moment_jets(std::max(config.max_n, 7L));
    for (long n = 1; n <= config.max_n; ++n) {
      const auto f = region_stats(face_distribution(table, n));
      const auto& jet = jets[static_cast<std::size_t>(n - 1)];
      const double dm = std::fabs(jet.face_mean() / f.mean_value - 1);
      const double dv = std::fabs(jet.face_variance() / f.variance_value - 1);
      if (dm > 1e-10 || dv > 1e-10) return "relative error above 1e-10 at n=" + std::to_string(n);
    }
    return "";
  });

  return out;
}

}  // namespace cubicmaps
