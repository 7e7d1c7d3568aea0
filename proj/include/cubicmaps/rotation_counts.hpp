#pragma once

// Rooted maps counted regardless of genus, through rotation systems.
//
// A rooted map with E edges corresponds to exactly 2^(E-1) (E-1)! rotation
// systems (permutations of the 2E darts of an edge-labelled, edge-oriented
// graph). Transitive rotation systems are the connected ones, so their
// exponential generating function is the log of the EGF of all rotation
// systems, and
//
//   rooted maps with E edges = E * [z^E] log(EGF) / 2^(E-1).

#include <optional>

#include "cubicmaps/exact.hpp"
#include "cubicmaps/series.hpp"

namespace cubicmaps {

/// Maps whose vertices all have degree `degree`.
/// Size convention: m vertices for even degree, 2k vertices (size k) for odd degree.
struct RegularFamily {
  long degree;

  bool even() const { return degree % 2 == 0; }
  long vertices(long size) const { return even() ? size : 2 * size; }
  long edges(long size) const { return even() ? size * (degree / 2) : size * degree; }
};

/// Rooted one-vertex maps with n edges: (2n-1)! / ((n-1)! 2^(n-1)).
BigInt bouquet_count(long n);

/// Coefficients a_0..a_order of the all-rotation-systems EGF used by each count.
/// The series is indexed in w, where w = z for all maps, w = z^d for degree 2d
/// and w = z^r for odd degree r.
TruncatedSeries all_maps_egf(long order);
TruncatedSeries regular_maps_egf(RegularFamily family, long order);

BigInt total_maps_exact(long n);
BigInt cubic_maps_exact(long n);  // 2n vertices, all genera
BigInt regular_maps_exact(RegularFamily family, long size);

/// Same as regular_maps_exact but sized by vertex count; rejects odd degree
/// with an odd number of vertices.
BigInt regular_maps_with_vertices(long degree, long vertices);

// Asymptotic formulas, evaluated through log-gamma. The log_ forms never
// overflow; the plain forms return exp of them.
double log_total_maps_asym(long n);
double log_regular_maps_asym(RegularFamily family, long size);
double total_maps_asym(long n);
double regular_maps_asym(RegularFamily family, long size);

/// exact / exp(log_asym), computed in log space.
double ratio_to_asym(const BigInt& exact, double log_asym);

struct CensusResult {
  long edges;
  BigInt transitive;    // transitive rotation systems found
  BigInt rooted_maps;   // transitive / (2^(edges-1) (edges-1)!)
};

class CensusSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr long kMaxCensusEdges = 5;

/// Exhaustive enumeration of rotation systems on 2*n_edges darts with the
/// edge involution fixed to (0 1)(2 3)...; counts the vertex permutations
/// generating a transitive group together with it. With `degree_filter`,
/// only permutations whose cycles all have that length are counted.
CensusResult brute_force_census(long n_edges, std::optional<long> degree_filter = std::nullopt);

}  // namespace cubicmaps
