#include "cubicmaps/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "cubicmaps/cubic_recursion.hpp"

namespace cubicmaps {

namespace {

// J_0..J_20 from the exact table.
const std::vector<DensePolynomial>& exact_j_polynomials() {
  static const std::vector<DensePolynomial> polys = [] {
    const HTable table = build_h_table(kLemma1ExactThrough);
    std::vector<DensePolynomial> out{DensePolynomial::monomial(Rational(2), 2)};
    for (long n = 1; n <= kLemma1ExactThrough; ++n) out.push_back(j_polynomial(table, n));
    return out;
  }();
  return polys;
}

// h_n(y) = J_n(y) n^-y with J_n evaluated exactly at the binary value of y.
double exact_h(long n, double y) {
  const Rational j = exact_j_polynomials().at(static_cast<std::size_t>(n)).evaluate(Rational(y));
  return j.get_d() * std::pow(static_cast<double>(n), -y);
}

// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0;
  double carry_ = 0;
};

// ((n - j) / n)^y
double shrink(long n, long j, double y) {
  return std::exp(y * std::log1p(-static_cast<double>(j) / static_cast<double>(n)));
}

void check_y(double y) {
  if (!(y >= 0 && y <= 2)) {
    std::ostringstream msg;
    msg << "y = " << y << " outside [0, 2]";
    throw std::domain_error(msg.str());
  }
}

}  // namespace

const std::vector<DensePolynomial>& seed_j_polynomials() {
  static const std::vector<DensePolynomial> seeds(exact_j_polynomials().begin(),
                                                  exact_j_polynomials().begin() + 7);
  return seeds;
}

HSequence h_sequence(double y, long N) {
  check_y(y);
  if (N < 7) throw std::invalid_argument("h_sequence needs N >= 7");

  HSequence seq{y, std::vector<double>(static_cast<std::size_t>(N))};
  auto& h = seq.values;
  auto at = [&h](long k) -> double& { return h[static_cast<std::size_t>(k - 1)]; };
  for (long k = 1; k <= 6; ++k) at(k) = exact_h(k, y);

  const double j1 = seed_j_polynomials()[1].evaluate(Rational(y)).get_d();
  const double j2 = seed_j_polynomials()[2].evaluate(Rational(y)).get_d();
  constexpr double kTailCut = 0x1p-60;
  double h_max = *std::max_element(h.begin(), h.begin() + 6);

  for (long n = 7; n <= N; ++n) {
    const double dn = static_cast<double>(n);
    const double c = 3 * dn + 2;
    const double base = 9 * dn * (dn * dn - 1);  // 9n(n^2-1)

    CompensatedSum total;
    total.add(2 * c * y / (3 * dn * (dn + 1)) * shrink(n, 1, y) * at(n - 1));
    total.add(((9 * dn * dn - 4) / (9 * (dn * dn - 1)) + 4 * c * y * y / base) * shrink(n, 2, y) *
              at(n - 2));
    total.add(2 * c / (base * (dn - 2)) * shrink(n, 3, y) * j1 * at(n - 3));
    total.add(4 * c / (base * (dn - 2) * (dn - 3)) * shrink(n, 4, y) * j2 * at(n - 4));

    // sum_{k=3}^{n-5} (k(n-2-k)/n)^y h_k h_{n-2-k} / C(n-2,k), folded on k <-> n-2-k.
    const long m = n - 2;
    CompensatedSum conv;
    double weight = 6.0 / (static_cast<double>(m) * (m - 1) * (m - 2));  // 1/C(m,3)
    for (long k = 3; 2 * k <= m; ++k) {
      const double scale = weight * std::pow(static_cast<double>(k) * (m - k) / dn, y);
      const double mult = (2 * k == m) ? 1.0 : 2.0;
      conv.add(mult * scale * at(k) * at(m - k));
      const double bound = mult * scale * h_max * h_max * static_cast<double>(m);
      if (3 * k < m && bound < kTailCut * conv.value()) break;
      weight *= static_cast<double>(k + 1) / static_cast<double>(m - k);
    }
    total.add(c / base * conv.value());

    at(n) = total.value();
    h_max = std::max(h_max, at(n));
  }
  return seq;
}

std::vector<HSequence> h_sequences(std::span<const double> ys, long N, unsigned workers) {
  for (double y : ys) check_y(y);
  std::vector<HSequence> out(ys.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(ys.size())));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < ys.size(); i += workers) out[i] = h_sequence(ys[i], N);
    });
  }
  pool.clear();
  return out;
}

KEstimate estimate_K(const HSequence& seq, double threshold) {
  if (!(seq.y > 0 && seq.y < 2)) throw std::domain_error("K estimation needs 0 < y < 2");
  const long N = seq.size();
  if (N < 14) throw std::invalid_argument("K estimation needs N >= 14");
  const long half = N / 2;
  KEstimate e;
  e.y = seq.y;
  e.N = N;
  e.raw = (seq[N] + seq[N - 1]) / 2;
  e.raw_half = (seq[half] + seq[half - 1]) / 2;
  // raw(N) ~ K + c/N and raw(N/2) ~ K + 2c/N.
  e.extrapolated = 2 * e.raw - e.raw_half;
  e.error_indicator = std::fabs(e.raw - e.raw_half);
  e.converged = e.error_indicator <= threshold;
  return e;
}

KEstimate estimate_K(double y, long N, double threshold) {
  if (!(y > 0 && y < 2)) {
    std::ostringstream msg;
    msg << "y = " << y << " outside (0, 2)";
    throw std::domain_error(msg.str());
  }
  return estimate_K(h_sequence(y, N), threshold);
}

double KEstimator::operator()(double y) {
  auto it = cache_.find(y);
  if (it == cache_.end()) it = cache_.emplace(y, estimate_K(y, N_, threshold_)).first;
  return it->second.value();
}

double log_total_cubic_asym(long n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const double dn = static_cast<double>(n);
  return std::log(3 / std::numbers::pi) + std::lgamma(dn + 1) + dn * std::log(6.0);
}

double log_total_cubic_asym_stirling(long n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const double dn = static_cast<double>(n);
  return std::log(6 / std::sqrt(2 * std::numbers::pi)) + dn * (std::log(6.0) - 1) +
         (dn + 0.5) * std::log(dn);
}

double total_cubic_asym(long n) { return std::exp(log_total_cubic_asym(n)); }

WindowError::WindowError(long n, long g, double r, double lo_, double hi_)
    : std::domain_error([&] {
        std::ostringstream msg;
        msg << "(n - 2g)/ln n = " << r << " for n = " << n << ", g = " << g << " lies outside ["
            << lo_ << ", " << hi_ << "]";
        return msg.str();
      }()),
      ratio(r),
      lo(lo_),
      hi(hi_) {}

double genus_window_ratio(long n, long g) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return static_cast<double>(n - 2 * g) / std::log(static_cast<double>(n));
}

double log_high_genus_asym(long n, long g, const KProvider& k, double epsilon) {
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const double v = genus_window_ratio(n, g);
  if (v < epsilon || v > 2 - epsilon) throw WindowError(n, g, v, epsilon, 2 - epsilon);
  const double dn = static_cast<double>(n);
  const double faces = static_cast<double>(n - 2 * g);  // n - 2g
  const double ln_n = std::log(dn);
  return std::log(std::numbers::sqrt2 / 3) + std::log(k(v)) + 2 * std::log(ln_n / faces) +
         dn * std::log(6.0) + std::lgamma(dn) - std::lgamma(faces + 1) + faces * std::log(ln_n);
}

double high_genus_asym(long n, long g, const KProvider& k, double epsilon) {
  return std::exp(log_high_genus_asym(n, g, k, epsilon));
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (!(step > 0) || hi < lo) throw std::invalid_argument("bad grid");
  std::vector<double> grid;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= count; ++i) grid.push_back(std::min(hi, lo + static_cast<double>(i) * step));
  return grid;
}

Lemma1Report lemma1_check(long N, std::span<const double> y_grid, unsigned workers) {
  if (N < 2) throw std::invalid_argument("lemma1_check needs N >= 2");
  for (double y : y_grid) check_y(y);

  Lemma1Report report;
  report.N = N;
  report.grid_points = y_grid.size();
  report.exact_through = std::min(N, kLemma1ExactThrough);

  std::vector<HSequence> floating;
  if (N > kLemma1ExactThrough) floating = h_sequences(y_grid, N, workers);

  for (std::size_t i = 0; i < y_grid.size(); ++i) {
    const double y = y_grid[i];
    for (long n = 2; n <= N; ++n) {
      const double h = n <= kLemma1ExactThrough ? exact_h(n, y) : floating[i][n];
      ++report.checked;
      if (h > report.max_h || report.argmax_n == 0) {
        report.max_h = h;
        report.argmax_n = n;
        report.argmax_y = y;
      }
      const double linear = 9.0 * static_cast<double>(n);
      const double uniform = std::exp(10.0 - 10.0 / static_cast<double>(n));
      if (!(h <= linear)) report.violations.push_back({n, y, h, linear, "9n"});
      if (!(h <= uniform)) report.violations.push_back({n, y, h, uniform, "exp(10-10/n)"});
    }
  }
  return report;
}

}  // namespace cubicmaps
