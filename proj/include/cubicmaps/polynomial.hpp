#pragma once

// Dense univariate polynomials over BigInt or Rational.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cubicmaps/exact.hpp"

namespace cubicmaps {

/// Convolution algorithm used by poly_mul. Results never depend on the choice;
/// it exists so the strategies can be benchmarked against each other.
enum class MulStrategy {
  schoolbook,
  karatsuba,
  kronecker,  // BigInt with nonnegative coefficients only; otherwise schoolbook
};

const char* to_string(MulStrategy s);
MulStrategy parse_mul_strategy(std::string_view name);

template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  Coeff evaluate(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Coeff coefficient_sum() const {
    Coeff acc = 0;
    for (const auto& c : coeffs_) acc += c;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using DensePolynomial = Polynomial<Rational>;
using IntPolynomial = Polynomial<BigInt>;

namespace detail {

constexpr std::size_t kKaratsubaCutoff = 12;

template <class Coeff>
void schoolbook_into(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
}

inline void schoolbook_into(std::span<const BigInt> a, std::span<const BigInt> b,
                            std::span<BigInt> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

// out += a*b, with |a| == |b|.
template <class Coeff>
void karatsuba_into(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) {
  const std::size_t n = a.size();
  if (n <= kKaratsubaCutoff) {
    schoolbook_into(a, b, out);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  auto a0 = a.first(lo), a1 = a.subspan(lo);
  auto b0 = b.first(lo), b1 = b.subspan(lo);

  std::vector<Coeff> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  karatsuba_into<Coeff>(a0, b0, z0);
  karatsuba_into<Coeff>(a1, b1, z2);

  std::vector<Coeff> sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
  for (std::size_t i = 0; i < lo; ++i) {
    sa[i] += a0[i];
    sb[i] += b0[i];
  }
  karatsuba_into<Coeff>(sa, sb, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + lo] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * lo] += z2[i];
}

// Unbalanced operands are split into blocks of the shorter length.
template <class Coeff>
void karatsuba_unbalanced_into(std::span<const Coeff> a, std::span<const Coeff> b,
                               std::span<Coeff> out) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t m = b.size();
  std::vector<Coeff> block(m);
  std::vector<Coeff> prod(2 * m - 1);
  for (std::size_t start = 0; start < a.size(); start += m) {
    const std::size_t len = std::min(m, a.size() - start);
    std::fill(block.begin(), block.end(), Coeff(0));
    std::copy_n(a.begin() + static_cast<std::ptrdiff_t>(start), len, block.begin());
    std::fill(prod.begin(), prod.end(), Coeff(0));
    karatsuba_into<Coeff>(block, b, prod);
    const std::size_t used = std::min(prod.size(), out.size() - start);
    for (std::size_t i = 0; i < used; ++i) out[start + i] += prod[i];
  }
}

std::vector<BigInt> kronecker_mul(std::span<const BigInt> a, std::span<const BigInt> b);

}  // namespace detail

/// Exact product. The strategy only changes how the convolution is evaluated.
template <class Coeff>
Polynomial<Coeff> poly_mul(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b,
                           MulStrategy strategy = MulStrategy::schoolbook) {
  if (a.is_zero() || b.is_zero()) return {};
  std::span<const Coeff> ca = a.coefficients(), cb = b.coefficients();
  if constexpr (std::is_same_v<Coeff, BigInt>) {
    if (strategy == MulStrategy::kronecker) return Polynomial<Coeff>(detail::kronecker_mul(ca, cb));
  }
  std::vector<Coeff> out(ca.size() + cb.size() - 1);
  if (strategy == MulStrategy::karatsuba) {
    detail::karatsuba_unbalanced_into<Coeff>(ca, cb, out);
  } else {
    detail::schoolbook_into(ca, cb, std::span<Coeff>(out));
  }
  return Polynomial<Coeff>(std::move(out));
}

}  // namespace cubicmaps
