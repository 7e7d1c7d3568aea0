#include "cubicmaps/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubicmaps {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    out[n] = acc;
  }
  return out;
}

TruncatedSeries series_log(const TruncatedSeries& s) {
  if (s.constant_term() != 1) {
    throw std::domain_error("series_log needs constant term 1, got " + to_string(s.constant_term()));
  }
  // With b = log s: n*b_n = n*s_n - sum_{k=1}^{n-1} k*b_k*s_{n-k}.
  const std::size_t order = s.order();
  TruncatedSeries out(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = s[n] * static_cast<long>(n);
    for (std::size_t k = 1; k < n; ++k) acc -= out[k] * s[n - k] * static_cast<long>(k);
    out[n] = acc / static_cast<long>(n);
  }
  return out;
}

}  // namespace cubicmaps
