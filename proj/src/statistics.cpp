#include "cubicmaps/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cubicmaps/asymptotics.hpp"

namespace cubicmaps {

DistributionStats count_stats(long n, std::span<const BigInt> counts) {
  DistributionStats s;
  s.n = n;
  BigInt first = 0, second = 0;
  s.total = 0;
  bool any = false;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const BigInt& c = counts[i];
    if (sgn(c) < 0) throw std::invalid_argument("negative count");
    if (is_zero(c)) continue;
    const long idx = static_cast<long>(i);
    if (!any) s.support_min = idx;
    s.support_max = idx;
    any = true;
    s.total += c;
    first += c * idx;
    second += c * idx * idx;
  }
  if (!any) throw std::invalid_argument("empty distribution");
  s.mean = make_rational(first, s.total);
  s.variance = make_rational(second, s.total) - s.mean * s.mean;
  s.mean_value = s.mean.get_d();
  s.variance_value = s.variance.get_d();
  return s;
}

DistributionStats genus_stats(const GenusDistribution& dist) { return count_stats(dist.n, dist.counts); }

DistributionStats region_stats(const FaceDistribution& dist) { return count_stats(dist.n, dist.counts); }

Jet jet_at_one(const DensePolynomial& p) {
  const DensePolynomial d1 = p.derivative();
  return {p.evaluate(1).get_d(), d1.evaluate(1).get_d(), d1.derivative().evaluate(1).get_d()};
}

namespace {

double norm(const Jet& j) { return std::fabs(j.value) + std::fabs(j.d1) + std::fabs(j.d2); }

}  // namespace

std::vector<MomentJet> moment_jets(long N) {
  if (N < 7) throw std::invalid_argument("moment_jets needs N >= 7");
  std::vector<Jet> jets{jet_at_one(seed_j_polynomials()[0])};
  for (long k = 1; k <= 6; ++k) jets.push_back(jet_at_one(seed_j_polynomials()[static_cast<std::size_t>(k)]));
  double norm_max = 0;
  for (const auto& j : jets) norm_max = std::max(norm_max, norm(j));
  constexpr double kTailCut = 0x1p-60;

  for (long n = 7; n <= N; ++n) {
    const double dn = static_cast<double>(n);
    const double c = 3 * dn + 2;
    const double base = 9 * dn * (dn * dn - 1);
    auto J = [&](long k) -> const Jet& { return jets[static_cast<std::size_t>(k)]; };

    const double a = 2 * c / (3 * dn * (dn + 1));  // coefficient of y J_{n-1}
    const double q = 4 * c / base;                 // coefficient of y^2 J_{n-2}
    const double b0 = (9 * dn * dn - 4) / (9 * (dn * dn - 1));
    Jet next = Jet{a, a, 0} * J(n - 1);
    next += Jet{b0 + q, 2 * q, 2 * q} * J(n - 2);
    next += (2 * c / (base * (dn - 2))) * (J(1) * J(n - 3));
    next += (4 * c / (base * (dn - 2) * (dn - 3))) * (J(2) * J(n - 4));

    const long m = n - 2;
    Jet conv;
    double weight = 6.0 / (static_cast<double>(m) * (m - 1) * (m - 2));
    for (long k = 3; 2 * k <= m; ++k) {
      const double mult = (2 * k == m) ? 1.0 : 2.0;
      conv += (mult * weight) * (J(k) * J(m - k));
      const double bound = 4 * mult * weight * norm_max * norm_max * static_cast<double>(m);
      const double floor = std::min({conv.value, conv.d1, conv.d2});
      if (3 * k < m && bound < kTailCut * floor) break;
      weight *= static_cast<double>(k + 1) / static_cast<double>(m - k);
    }
    next += (c / base) * conv;

    jets.push_back(next);
    norm_max = std::max(norm_max, norm(next));
  }

  std::vector<MomentJet> out;
  for (long n = 1; n <= N; ++n) out.push_back({n, jets[static_cast<std::size_t>(n)]});
  return out;
}

double standard_normal_cdf(double t) { return 0.5 * std::erfc(-t / std::numbers::sqrt2); }

NormalityReport normality_report(const GenusDistribution& dist, std::span<const double> t_grid) {
  if (dist.n < 2) throw std::invalid_argument("normality report needs n >= 2");
  const DistributionStats stats = genus_stats(dist);
  const double sd = std::sqrt(stats.variance_value);
  const double ln_n = std::log(static_cast<double>(dist.n));

  // cumulative[g] = P(genus <= g)
  std::vector<double> cumulative;
  BigInt running = 0;
  for (const auto& c : dist.counts) {
    running += c;
    cumulative.push_back(make_rational(running, stats.total).get_d());
  }
  auto cdf_at = [&](double threshold) {
    if (threshold < 0) return 0.0;
    const auto g = static_cast<std::size_t>(std::floor(threshold));
    return g >= cumulative.size() ? 1.0 : cumulative[g];
  };

  NormalityReport r;
  r.n = dist.n;
  for (double t : t_grid) {
    const double phi = standard_normal_cdf(t);
    const double a = cdf_at((dist.n - ln_n) / 2 + t * std::sqrt(ln_n) / 2);
    const double e = sd > 0 ? cdf_at(stats.mean_value + t * sd) : (t >= 0 ? 1.0 : 0.0);
    r.t.push_back(t);
    r.cdf_asymptotic.push_back(a);
    r.cdf_exact.push_back(e);
    r.sup_distance_asymptotic = std::max(r.sup_distance_asymptotic, std::fabs(a - phi));
    r.sup_distance_exact = std::max(r.sup_distance_exact, std::fabs(e - phi));
  }

  if (sd > 0) {
    double below = 0;
    for (std::size_t g = 0; g < cumulative.size(); ++g) {
      const double phi = standard_normal_cdf((static_cast<double>(g) - stats.mean_value) / sd);
      r.ks_distance_exact =
          std::max({r.ks_distance_exact, std::fabs(cumulative[g] - phi), std::fabs(below - phi)});
      below = cumulative[g];
    }
  }
  return r;
}

}  // namespace cubicmaps
