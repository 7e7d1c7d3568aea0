#pragma once

// Persistence for HTable.
//
// Checkpoint layout (text, one record per line):
//
//   cubicmaps-htable <format version>
//   max_n <n>
//   row <n> <entry count> <digest>        one per row 1..max_n
//   entries
//   <n> <g> <H(n,g) decimal>              one per entry, rows in order
//
// The digest is the 64-bit FNV-1a hash (16 hex digits) of the row's decimal
// entries joined by single spaces.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string_view>

#include "cubicmaps/cubic_recursion.hpp"

namespace cubicmaps {

inline constexpr int kCheckpointVersion = 1;

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t row_digest(const std::vector<BigInt>& row);

void write_checkpoint(const HTable& table, std::ostream& out);
HTable read_checkpoint(std::istream& in);

/// Writes through a temporary file renamed over `path`, so an interrupted
/// write leaves the previous checkpoint intact.
void write_checkpoint(const HTable& table, const std::filesystem::path& path);
HTable read_checkpoint(const std::filesystem::path& path);

/// CSV "n,g,C" with one row per (n,g), n = 1..max_n.
void write_genus_csv(const HTable& table, std::ostream& out);

/// {"max_n": N, "C": [["4","1"], ["32","28"], ...]} with C[n-1][g] = C(n,g).
void write_genus_json(const HTable& table, std::ostream& out);

}  // namespace cubicmaps
