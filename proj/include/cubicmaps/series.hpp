#pragma once

// Truncated formal power series over the rationals.

#include <cstddef>
#include <vector>

#include "cubicmaps/exact.hpp"

namespace cubicmaps {

/// Power series known through z^order. Coefficients past the order are
/// unknown, never implicitly zero, so binary operations truncate to the
/// smaller order of their operands.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Pads with zeros or drops terms so exactly order+1 coefficients remain.
  TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const Rational& constant_term() const { return coeffs_.front(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Formal logarithm of a series with constant term 1, to the same order.
/// Solves (log s)' = s'/s one coefficient at a time: O(order^2).
/// Throws std::domain_error when the constant term is not 1.
TruncatedSeries series_log(const TruncatedSeries& s);

}  // namespace cubicmaps
