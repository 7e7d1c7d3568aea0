#pragma once

// Floating-point side of the cubic-map asymptotics: the normalized face
// polynomials h_n(y) = n^(-y) J_n(y), the limit K(y) = lim h_n(y), and the
// closed-form estimates built on it.

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicmaps/exact.hpp"
#include "cubicmaps/polynomial.hpp"

namespace cubicmaps {

/// Exact J_1..J_6, the seeds of the floating recursion. Index 0 holds J_0(y) = 2y^2.
const std::vector<DensePolynomial>& seed_j_polynomials();

/// h_1(y)..h_N(y) for one y.
struct HSequence {
  double y = 0;
  std::vector<double> values;  // values[k-1] = h_k(y)

  long size() const { return static_cast<long>(values.size()); }
  double operator[](long k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

/// Seeds h_1..h_6 from the exact polynomials, then runs the five-term
/// recursion for n >= 7. The convolution tail is cut once its remaining
/// contribution is below 2^-60 of the running sum.
/// Throws std::domain_error unless 0 <= y <= 2, std::invalid_argument for N < 7.
HSequence h_sequence(double y, long N);

/// One sequence per y, computed on up to `workers` threads. Output order
/// follows `ys` and each sequence is identical to a single h_sequence call.
std::vector<HSequence> h_sequences(std::span<const double> ys, long N, unsigned workers = 1);

struct KEstimate {
  double y = 0;
  long N = 0;
  double raw = 0;           // (h_N + h_{N-1}) / 2
  double raw_half = 0;      // same at N/2
  double extrapolated = 0;  // 2 raw - raw_half, assuming a c/N leading error
  double error_indicator = 0;  // |raw - raw_half|
  bool converged = true;    // error_indicator <= threshold

  double value() const { return extrapolated; }
};

/// Requires 0 < y < 2 and N >= 14.
KEstimate estimate_K(double y, long N, double threshold = 1e-3);
KEstimate estimate_K(const HSequence& seq, double threshold = 1e-3);

/// Memoizing K(y) source for the high-genus estimate. Not thread-safe.
class KEstimator {
 public:
  explicit KEstimator(long N, double threshold = 1e-3) : N_(N), threshold_(threshold) {}
  double operator()(double y);
  const std::map<double, KEstimate>& cache() const { return cache_; }

 private:
  long N_;
  double threshold_;
  std::map<double, KEstimate> cache_;
};

using KProvider = std::function<double(double)>;

/// log of (3/pi) n! 6^n.
double log_total_cubic_asym(long n);
/// log of 6/sqrt(2 pi) (6/e)^n n^(n+1/2), the Stirling form of the same estimate.
double log_total_cubic_asym_stirling(long n);
double total_cubic_asym(long n);

class WindowError : public std::domain_error {
 public:
  WindowError(long n, long g, double ratio, double lo, double hi);
  double ratio;
  double lo, hi;
};

/// (n - 2g) / ln n, the argument at which K is evaluated.
double genus_window_ratio(long n, long g);

/// log of (sqrt 2 / 3) K(v) (ln n/(n-2g))^2 6^n (n-1)!/(n-2g)! (ln n)^(n-2g),
/// v = (n-2g)/ln n. Throws WindowError unless v lies in [epsilon, 2-epsilon].
double log_high_genus_asym(long n, long g, const KProvider& k, double epsilon = 0.2);
double high_genus_asym(long n, long g, const KProvider& k, double epsilon = 0.2);

struct Lemma1Violation {
  long n;
  double y;
  double h;
  double bound;
  std::string which;  // "9n" or "exp(10-10/n)"
};

struct Lemma1Report {
  long N = 0;
  std::size_t grid_points = 0;
  long exact_through = 0;  // n <= exact_through evaluated from exact polynomials
  long checked = 0;
  double max_h = 0;
  long argmax_n = 0;
  double argmax_y = 0;
  std::vector<Lemma1Violation> violations;

  bool ok() const { return violations.empty(); }
};

inline constexpr long kLemma1ExactThrough = 20;

/// Checks h_n(y) <= 9n and h_n(y) <= exp(10 - 10/n) for 2 <= n <= N on the grid.
Lemma1Report lemma1_check(long N, std::span<const double> y_grid, unsigned workers = 1);

/// lo, lo+step, lo+2*step, ... up to and including hi (within rounding).
std::vector<double> uniform_grid(double lo, double hi, double step);

}  // namespace cubicmaps
