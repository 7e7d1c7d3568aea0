#include "cubicmaps/rotation_counts.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace cubicmaps {

BigInt bouquet_count(long n) {
  if (n < 1) throw std::invalid_argument("bouquet_count needs n >= 1");
  const auto un = static_cast<unsigned long>(n);
  return exact_divide(factorial(2 * un - 1), factorial(un - 1) * power(2, un - 1));
}

TruncatedSeries all_maps_egf(long order) {
  TruncatedSeries s(static_cast<std::size_t>(order));
  for (long k = 0; k <= order; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    s[static_cast<std::size_t>(k)] = make_rational(factorial(2 * uk), factorial(uk));
  }
  return s;
}

TruncatedSeries regular_maps_egf(RegularFamily family, long order) {
  if (family.degree < 2) throw std::invalid_argument("degree must be at least 2");
  TruncatedSeries s(static_cast<std::size_t>(order));
  const auto r = static_cast<unsigned long>(family.degree);
  for (long m = 0; m <= order; ++m) {
    const auto um = static_cast<unsigned long>(m);
    // Permutations of the darts with every cycle of length r, divided by E!.
    const unsigned long cycles = family.even() ? um : 2 * um;
    const unsigned long edges = family.even() ? um * (r / 2) : um * r;
    const BigInt perms = exact_divide(factorial(2 * edges), power(r, cycles) * factorial(cycles));
    s[static_cast<std::size_t>(m)] = make_rational(perms, factorial(edges));
  }
  return s;
}

namespace {

BigInt rooted_from_log_coefficient(const Rational& c, long edges) {
  // edges! * c rotation systems, each rooted map accounting for 2^(E-1) (E-1)!.
  Rational count = c * edges / Rational(power(2, static_cast<unsigned long>(edges - 1)));
  return to_integer(count);
}

}  // namespace

BigInt total_maps_exact(long n) {
  if (n < 1) throw std::invalid_argument("total_maps_exact needs n >= 1");
  const TruncatedSeries log_egf = series_log(all_maps_egf(n));
  return rooted_from_log_coefficient(log_egf[static_cast<std::size_t>(n)], n);
}

BigInt regular_maps_exact(RegularFamily family, long size) {
  if (size < 1) throw std::invalid_argument("size must be at least 1");
  const TruncatedSeries log_egf = series_log(regular_maps_egf(family, size));
  return rooted_from_log_coefficient(log_egf[static_cast<std::size_t>(size)], family.edges(size));
}

BigInt cubic_maps_exact(long n) { return regular_maps_exact(RegularFamily{3}, n); }

BigInt regular_maps_with_vertices(long degree, long vertices) {
  RegularFamily family{degree};
  if (!family.even() && vertices % 2 != 0) {
    throw std::invalid_argument("odd degree " + std::to_string(degree) +
                                " needs an even number of vertices, got " + std::to_string(vertices));
  }
  return regular_maps_exact(family, family.even() ? vertices : vertices / 2);
}

double log_total_maps_asym(long n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const double dn = static_cast<double>(n);
  return std::lgamma(2 * dn + 1) - std::lgamma(dn) + (1 - dn) * std::numbers::ln2;
}

double log_regular_maps_asym(RegularFamily family, long size) {
  if (family.degree < 3) throw std::invalid_argument("asymptotics need degree >= 3");
  if (size < 1) throw std::invalid_argument("size must be at least 1");
  const double r = static_cast<double>(family.degree);
  const double s = static_cast<double>(size);
  if (family.even()) {
    const double d = r / 2;
    return std::lgamma(2 * s * d + 1) - std::lgamma(s + 1) - std::lgamma(s * d) -
           s * std::log(2 * d) + (1 - s * d) * std::numbers::ln2;
  }
  return std::lgamma(2 * s * r + 1) - std::lgamma(2 * s + 1) - std::lgamma(s * r) -
         2 * s * std::log(r) + (1 - s * r) * std::numbers::ln2;
}

double total_maps_asym(long n) { return std::exp(log_total_maps_asym(n)); }
double regular_maps_asym(RegularFamily family, long size) {
  return std::exp(log_regular_maps_asym(family, size));
}

double ratio_to_asym(const BigInt& exact, double log_asym) {
  return std::exp(log_abs(exact) - log_asym);
}

namespace {

bool cycles_all_of_length(const std::vector<int>& perm, long length) {
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    long len = 0;
    for (auto i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
      seen[i] = 1;
      ++len;
    }
    if (len != length) return false;
  }
  return true;
}

// Dart 2e and 2e+1 are the two ends of edge e.
bool transitive_with_edges(const std::vector<int>& perm) {
  std::vector<std::size_t> parent(perm.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = perm.size();
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };
  for (std::size_t i = 0; i < perm.size(); ++i) {
    unite(i, static_cast<std::size_t>(perm[i]));
    unite(i, i ^ 1U);
  }
  return components == 1;
}

}  // namespace

CensusResult brute_force_census(long n_edges, std::optional<long> degree_filter) {
  if (n_edges < 1) throw std::invalid_argument("census needs at least one edge");
  if (n_edges > kMaxCensusEdges) {
    throw CensusSizeError("census limited to " + std::to_string(kMaxCensusEdges) +
                          " edges, asked for " + std::to_string(n_edges));
  }
  std::vector<int> perm(static_cast<std::size_t>(2 * n_edges));
  std::iota(perm.begin(), perm.end(), 0);
  unsigned long long transitive = 0;
  do {
    if (degree_filter && !cycles_all_of_length(perm, *degree_filter)) continue;
    if (transitive_with_edges(perm)) ++transitive;
  } while (std::next_permutation(perm.begin(), perm.end()));

  CensusResult out{n_edges, BigInt(static_cast<unsigned long>(transitive)), 0};
  const auto e = static_cast<unsigned long>(n_edges);
  out.rooted_maps = exact_divide(out.transitive, power(2, e - 1) * factorial(e - 1));
  return out;
}

}  // namespace cubicmaps
