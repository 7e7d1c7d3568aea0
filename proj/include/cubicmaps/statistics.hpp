#pragma once

// Moments and normality diagnostics for the genus and face distributions.

#include <span>
#include <vector>

#include "cubicmaps/cubic_recursion.hpp"
#include "cubicmaps/exact.hpp"

namespace cubicmaps {

struct DistributionStats {
  long n = 0;
  BigInt total;
  Rational mean;
  Rational variance;
  double mean_value = 0;
  double variance_value = 0;
  long support_min = 0;  // smallest index with a nonzero count
  long support_max = 0;
};

/// Exact moments of a count vector indexed from 0. Throws std::invalid_argument
/// when every count is zero.
DistributionStats count_stats(long n, std::span<const BigInt> counts);

DistributionStats genus_stats(const GenusDistribution& dist);
DistributionStats region_stats(const FaceDistribution& dist);

/// Value and first two derivatives of a function at a point.
struct Jet {
  double value = 0;
  double d1 = 0;
  double d2 = 0;

  Jet& operator+=(const Jet& o) {
    value += o.value;
    d1 += o.d1;
    d2 += o.d2;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
            a.d2 * b.value + 2 * a.d1 * b.d1 + a.value * b.d2};
  }
  friend Jet operator*(double s, const Jet& a) { return {s * a.value, s * a.d1, s * a.d2}; }
};

/// J_n and its first two derivatives at y = 1.
struct MomentJet {
  long n = 0;
  Jet j;

  double face_mean() const { return j.d1 / j.value; }
  double face_variance() const {
    const double m = face_mean();
    return j.d2 / j.value + m - m * m;
  }
};

/// Order-2 jets of J_1..J_N at y = 1 through the six-term face recursion,
/// seeded with the exact derivatives of J_1..J_6. Requires N >= 7.
std::vector<MomentJet> moment_jets(long N);

/// Jet of an exact polynomial at y = 1.
Jet jet_at_one(const DensePolynomial& p);

struct NormalityReport {
  long n = 0;
  std::vector<double> t;
  // Centering (n - ln n)/2 + t sqrt(ln n)/2.
  std::vector<double> cdf_asymptotic;
  double sup_distance_asymptotic = 0;
  // Centering mean + t sd from the exact moments.
  std::vector<double> cdf_exact;
  double sup_distance_exact = 0;
  // sup over all real thresholds of |F(mean + t sd) - Phi(t)|.
  double ks_distance_exact = 0;
};

double standard_normal_cdf(double t);

/// Requires n >= 2.
NormalityReport normality_report(const GenusDistribution& dist, std::span<const double> t_grid);

}  // namespace cubicmaps
