#pragma once

// Genus distribution of rooted cubic maps.
//
// C(n,g) counts rooted cubic maps with 2n vertices on the orientable surface
// of genus g. The table stores the scaled values H(n,g) = (3n+2) C(n,g),
// built row by row from the Goulden-Jackson recursion
//
//   H(n,g) = 4n(3n+2)(3n-2)/(n+1) H(n-2,g-1)
//          + 4(3n+2)/(n+1) sum_{k=-1}^{n-1} sum_{h=0}^{g} H(k,h) H(n-2-k,g-h)
//
// with H(-1,g) = [g=0]/2, H(0,g) = 2[g=0] and H(n,-1) = 0.

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicmaps/exact.hpp"
#include "cubicmaps/polynomial.hpp"

namespace cubicmaps {

/// Largest genus with a nonzero count for 2n vertices: floor((n+1)/2).
constexpr long max_genus(long n) { return (n + 1) / 2; }

class HTable {
 public:
  HTable();

  /// Rows with n >= 1 must be supplied in order; see append_row.
  long max_n() const { return static_cast<long>(rows_.size()) - 1; }

  /// H(n,g) for n >= -1. Zero outside the support.
  Rational value(long n, long g) const;

  /// Integer row H(n, 0..max_genus(n)) for 0 <= n <= max_n.
  const std::vector<BigInt>& row(long n) const;

  /// Appends row max_n()+1. Checks its length and that (3n+2) divides every entry.
  void append_row(std::vector<BigInt> row);

  /// Drops rows beyond n.
  void truncate(long n);

  friend bool operator==(const HTable&, const HTable&) = default;

 private:
  std::vector<std::vector<BigInt>> rows_;  // rows_[0] is {2}
};

struct BuildProgress {
  long row;
  long max_n;
  std::chrono::duration<double> elapsed;
  std::chrono::duration<double> eta;
};

struct BuildOptions {
  std::optional<std::filesystem::path> checkpoint;
  long checkpoint_stride = 25;
  unsigned workers = 1;
  MulStrategy strategy = MulStrategy::kronecker;
  std::function<void(const BuildProgress&)> on_row;
};

/// Builds (or resumes from options.checkpoint) the table through max_n.
/// Throws std::invalid_argument for max_n < 1, CheckpointError for a bad
/// checkpoint and IntegralityError if a computed entry is not an integer.
HTable build_h_table(long max_n, const BuildOptions& options = {});

/// Computes row n from rows -1..n-1 of `table` (table.max_n() == n-1).
std::vector<BigInt> compute_row(const HTable& table, long n, unsigned workers = 1,
                                MulStrategy strategy = MulStrategy::kronecker);

struct GenusDistribution {
  long n;
  std::vector<BigInt> counts;  // counts[g] = C(n,g), g = 0..max_genus(n)

  BigInt total() const;
};

/// Counts indexed by number of faces f = n + 2 - 2g; counts[f] for f = 0..n+2.
struct FaceDistribution {
  long n;
  std::vector<BigInt> counts;

  BigInt total() const;
};

GenusDistribution genus_distribution(const HTable& table, long n);
FaceDistribution face_distribution(const HTable& table, long n);

/// H_n(x) = 1/(n! 6^n) sum_g H(n,g) x^g, for 0 <= n <= max_n.
DensePolynomial genus_polynomial(const HTable& table, long n);

/// J_n(y) = H_n(1/y^2) y^(n+2), for 1 <= n <= max_n.
DensePolynomial j_polynomial(const HTable& table, long n);

/// H_0(x)..H_max_n(x) from the polynomial recursion
///   H_n = 2(3n+2)/(3n(n+1)) H_{n-1} + (9n^2-4)/(9(n^2-1)) x H_{n-2}
///       + (3n+2)/(9n(n^2-1)) sum_{k=0}^{n-2} H_k H_{n-2-k} / C(n-2,k),
/// seeded with H_0 = 2 and H_1 = (20+5x)/6. Independent of the scalar table.
std::vector<DensePolynomial> genus_polynomials_recursive(long max_n);
DensePolynomial genus_polynomial_recursive(long n);

/// y^(n+2) H(1/y^2) for a polynomial H of degree at most (n+2)/2.
DensePolynomial substitute_faces(const DensePolynomial& h, long n);

}  // namespace cubicmaps
