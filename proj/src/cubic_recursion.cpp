#include "cubicmaps/cubic_recursion.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "cubicmaps/table_io.hpp"

namespace cubicmaps {

HTable::HTable() : rows_{{BigInt(2)}} {}

Rational HTable::value(long n, long g) const {
  if (g < 0) return 0;
  if (n == -1) return g == 0 ? Rational(1, 2) : Rational(0);
  const auto& r = row(n);
  return g < static_cast<long>(r.size()) ? Rational(r[static_cast<std::size_t>(g)]) : Rational(0);
}

const std::vector<BigInt>& HTable::row(long n) const {
  if (n < 0 || n > max_n()) {
    throw std::out_of_range("row " + std::to_string(n) + " outside table (max_n = " +
                            std::to_string(max_n()) + ")");
  }
  return rows_[static_cast<std::size_t>(n)];
}

void HTable::append_row(std::vector<BigInt> row) {
  const long n = max_n() + 1;
  if (static_cast<long>(row.size()) != max_genus(n) + 1) {
    throw std::invalid_argument("row " + std::to_string(n) + " has " + std::to_string(row.size()) +
                                " entries, expected " + std::to_string(max_genus(n) + 1));
  }
  const BigInt scale = 3 * n + 2;
  for (const auto& h : row) {
    if (sgn(h) < 0 || !mpz_divisible_p(h.get_mpz_t(), scale.get_mpz_t())) {
      throw IntegralityError("H(" + std::to_string(n) + ",g) = " + to_decimal(h) +
                             " is not a nonnegative multiple of " + to_decimal(scale));
    }
  }
  rows_.push_back(std::move(row));
}

void HTable::truncate(long n) {
  if (n < 0) throw std::invalid_argument("cannot truncate below row 0");
  if (n < max_n()) rows_.resize(static_cast<std::size_t>(n) + 1);
}

namespace {

IntPolynomial row_polynomial(const HTable& t, long k) { return IntPolynomial(t.row(k)); }

// sum_{k=0}^{n-2} H_k(x) H_{n-2-k}(x) over integer rows. Terms k and n-2-k
// are equal, so each pair is multiplied once.
IntPolynomial inner_convolution(const HTable& t, long n, unsigned workers, MulStrategy strategy) {
  const long m = n - 2;
  if (m < 0) return {};
  const long pairs = m / 2 + 1;  // k = 0..floor(m/2)
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(pairs)));

  auto partial = [&](long begin, long end) {
    IntPolynomial acc;
    for (long k = begin; k < end; ++k) {
      IntPolynomial p = poly_mul(row_polynomial(t, k), row_polynomial(t, m - k), strategy);
      if (k != m - k) p *= BigInt(2);
      acc += p;
    }
    return acc;
  };

  if (workers == 1) return partial(0, pairs);

  // Contiguous chunks reduced in chunk order; exact integer sums make the
  // result independent of the worker count anyway.
  std::vector<IntPolynomial> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const long begin = pairs * w / workers, end = pairs * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { parts[w] = partial(begin, end); });
    }
  }
  IntPolynomial total;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace

std::vector<BigInt> compute_row(const HTable& table, long n, unsigned workers,
                                MulStrategy strategy) {
  if (n < 1 || table.max_n() != n - 1) {
    throw std::invalid_argument("compute_row(" + std::to_string(n) + ") needs a table through row " +
                                std::to_string(n - 1));
  }
  const IntPolynomial inner = inner_convolution(table, n, workers, strategy);
  const Rational outer_factor = make_rational(4 * (3 * n + 2), n + 1);
  const Rational genus_factor = make_rational(BigInt(4 * n) * (3 * n + 2) * (3 * n - 2), n + 1);

  std::vector<BigInt> row(static_cast<std::size_t>(max_genus(n)) + 1);
  for (long g = 0; g <= max_genus(n); ++g) {
    // Boundary terms k = -1 and k = n-1 pair H(n-1, .) with the half-integer row -1.
    Rational conv = inner[static_cast<std::size_t>(g)];
    conv += table.value(-1, 0) * table.value(n - 1, g);
    conv += table.value(n - 1, g) * table.value(-1, 0);

    Rational h = genus_factor * table.value(n - 2, g - 1) + outer_factor * conv;
    if (h.get_den() != 1) {
      throw IntegralityError("H(" + std::to_string(n) + "," + std::to_string(g) +
                             ") = " + to_string(h) + " is not an integer");
    }
    row[static_cast<std::size_t>(g)] = h.get_num();
  }
  return row;
}

HTable build_h_table(long max_n, const BuildOptions& options) {
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  if (options.checkpoint_stride < 1) throw std::invalid_argument("checkpoint stride must be >= 1");

  HTable table;
  if (options.checkpoint && std::filesystem::exists(*options.checkpoint)) {
    table = read_checkpoint(*options.checkpoint);
    table.truncate(max_n);
  }

  const long first = table.max_n() + 1;
  const auto start = std::chrono::steady_clock::now();
  bool dirty = false;
  for (long n = first; n <= max_n; ++n) {
    table.append_row(compute_row(table, n, options.workers, options.strategy));
    dirty = true;
    if (options.checkpoint && n % options.checkpoint_stride == 0) {
      write_checkpoint(table, *options.checkpoint);
      dirty = false;
    }
    if (options.on_row) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      // Row cost grows roughly like n^3.
      auto work = [](long a, long b) {
        double s = 0;
        for (long i = a; i <= b; ++i) s += static_cast<double>(i) * i * i;
        return s;
      };
      const double done = work(first, n), left = work(n + 1, max_n);
      options.on_row({n, max_n, elapsed, elapsed * (done > 0 ? left / done : 0.0)});
    }
  }
  if (options.checkpoint && dirty) write_checkpoint(table, *options.checkpoint);
  return table;
}

BigInt GenusDistribution::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

BigInt FaceDistribution::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

namespace {

void require_map_row(const HTable& table, long n) {
  if (n < 1 || n > table.max_n()) {
    throw std::out_of_range("n = " + std::to_string(n) + " outside 1.." +
                            std::to_string(table.max_n()));
  }
}

}  // namespace

GenusDistribution genus_distribution(const HTable& table, long n) {
  require_map_row(table, n);
  const BigInt scale = 3 * n + 2;
  GenusDistribution out{n, {}};
  for (const auto& h : table.row(n)) out.counts.push_back(exact_divide(h, scale));
  return out;
}

FaceDistribution face_distribution(const HTable& table, long n) {
  const GenusDistribution genus = genus_distribution(table, n);
  FaceDistribution out{n, std::vector<BigInt>(static_cast<std::size_t>(n) + 3)};
  for (std::size_t g = 0; g < genus.counts.size(); ++g) {
    out.counts[static_cast<std::size_t>(n + 2) - 2 * g] = genus.counts[g];
  }
  return out;
}

DensePolynomial genus_polynomial(const HTable& table, long n) {
  if (n < 0 || n > table.max_n()) {
    throw std::out_of_range("n = " + std::to_string(n) + " outside 0.." +
                            std::to_string(table.max_n()));
  }
  const BigInt scale = factorial(static_cast<unsigned long>(n)) * power(6, static_cast<unsigned long>(n));
  std::vector<Rational> coeffs;
  for (const auto& h : table.row(n)) coeffs.push_back(make_rational(h, scale));
  return DensePolynomial(std::move(coeffs));
}

DensePolynomial substitute_faces(const DensePolynomial& h, long n) {
  if (2 * h.degree() > n + 2) {
    throw std::invalid_argument("degree too large for the face substitution at n = " +
                                std::to_string(n));
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 3);
  for (long g = 0; g <= h.degree(); ++g) {
    coeffs[static_cast<std::size_t>(n + 2 - 2 * g)] = h[static_cast<std::size_t>(g)];
  }
  return DensePolynomial(std::move(coeffs));
}

DensePolynomial j_polynomial(const HTable& table, long n) {
  require_map_row(table, n);
  return substitute_faces(genus_polynomial(table, n), n);
}

std::vector<DensePolynomial> genus_polynomials_recursive(long max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  std::vector<DensePolynomial> hs{DensePolynomial{Rational(2)},
                                  DensePolynomial{make_rational(20, 6), make_rational(5, 6)}};
  for (long n = 2; n <= max_n; ++n) {
    DensePolynomial next = hs[n - 1] * make_rational(2 * (3 * n + 2), 3 * n * (n + 1));
    next += poly_mul(DensePolynomial{Rational(0), Rational(1)}, hs[n - 2]) *
            make_rational(9 * n * n - 4, 9 * (n * n - 1));
    DensePolynomial conv;
    for (long k = 0; k <= n - 2; ++k) {
      conv += poly_mul(hs[k], hs[n - 2 - k]) * make_rational(1, binomial(n - 2, k));
    }
    next += conv * make_rational(3 * n + 2, 9 * n * (n * n - 1));
    hs.push_back(std::move(next));
  }
  hs.resize(static_cast<std::size_t>(max_n) + 1);
  return hs;
}

DensePolynomial genus_polynomial_recursive(long n) { return genus_polynomials_recursive(n).back(); }

}  // namespace cubicmaps
