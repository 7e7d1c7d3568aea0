#include "cubicmaps/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubicmaps {

const char* to_string(MulStrategy s) {
  switch (s) {
    case MulStrategy::schoolbook: return "schoolbook";
    case MulStrategy::karatsuba: return "karatsuba";
    case MulStrategy::kronecker: return "kronecker";
  }
  return "?";
}

MulStrategy parse_mul_strategy(std::string_view name) {
  if (name == "schoolbook") return MulStrategy::schoolbook;
  if (name == "karatsuba") return MulStrategy::karatsuba;
  if (name == "kronecker") return MulStrategy::kronecker;
  throw std::invalid_argument("unknown multiplication strategy '" + std::string(name) + "'");
}

namespace detail {

namespace {

std::size_t max_bits(std::span<const BigInt> v) {
  std::size_t bits = 0;
  for (const auto& c : v) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

bool all_nonnegative(std::span<const BigInt> v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& c) { return sgn(c) >= 0; });
}

// Packs v into one integer with `slot` 64-bit words per coefficient.
BigInt pack(std::span<const BigInt> v, std::size_t slot) {
  std::vector<std::uint64_t> words(v.size() * slot, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t count = 0;
    mpz_export(words.data() + i * slot, &count, -1, sizeof(std::uint64_t), 0, 0,
               v[i].get_mpz_t());
  }
  BigInt out;
  mpz_import(out.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
  return out;
}

}  // namespace

// Kronecker substitution: evaluate both polynomials at 2^(64*slot), multiply
// once, read the product's coefficients back out of the slots.
std::vector<BigInt> kronecker_mul(std::span<const BigInt> a, std::span<const BigInt> b) {
  const std::size_t out_len = a.size() + b.size() - 1;
  if (!all_nonnegative(a) || !all_nonnegative(b)) {
    std::vector<BigInt> out(out_len);
    schoolbook_into(a, b, std::span<BigInt>(out));
    return out;
  }
  std::size_t carry_bits = 1;
  while ((std::size_t{1} << carry_bits) < std::min(a.size(), b.size()) + 1) ++carry_bits;
  const std::size_t bits = max_bits(a) + max_bits(b) + carry_bits;
  const std::size_t slot = (bits + 63) / 64;

  BigInt product = pack(a, slot) * pack(b, slot);

  std::vector<std::uint64_t> words(out_len * slot, 0);
  std::size_t count = 0;
  mpz_export(words.data(), &count, -1, sizeof(std::uint64_t), 0, 0, product.get_mpz_t());
  if (count > words.size()) throw std::logic_error("kronecker product overflowed its slots");

  std::vector<BigInt> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) {
    mpz_import(out[i].get_mpz_t(), slot, -1, sizeof(std::uint64_t), 0, 0, words.data() + i * slot);
  }
  return out;
}

}  // namespace detail

}  // namespace cubicmaps
