#include "cubicmaps/table_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

namespace cubicmaps {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t row_digest(const std::vector<BigInt>& row) {
  std::string joined;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) joined += ' ';
    joined += to_decimal(row[i]);
  }
  return fnv1a64(joined);
}

namespace {

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

[[noreturn]] void corrupt(long line, const std::string& what) {
  throw CheckpointError("checkpoint line " + std::to_string(line) + ": " + what);
}

}  // namespace

void write_checkpoint(const HTable& table, std::ostream& out) {
  out << "cubicmaps-htable " << kCheckpointVersion << '\n';
  out << "max_n " << table.max_n() << '\n';
  for (long n = 1; n <= table.max_n(); ++n) {
    out << "row " << n << ' ' << table.row(n).size() << ' ' << hex64(row_digest(table.row(n)))
        << '\n';
  }
  out << "entries\n";
  for (long n = 1; n <= table.max_n(); ++n) {
    const auto& row = table.row(n);
    for (std::size_t g = 0; g < row.size(); ++g) out << n << ' ' << g << ' ' << row[g] << '\n';
  }
}

HTable read_checkpoint(std::istream& in) {
  std::string line;
  long line_no = 0;
  auto next = [&]() -> std::istringstream {
    if (!std::getline(in, line)) corrupt(line_no + 1, "unexpected end of file");
    ++line_no;
    return std::istringstream(line);
  };

  {
    auto s = next();
    std::string magic;
    int version = 0;
    if (!(s >> magic >> version) || magic != "cubicmaps-htable") corrupt(line_no, "not a checkpoint");
    if (version != kCheckpointVersion) {
      corrupt(line_no, "unsupported format version " + std::to_string(version));
    }
  }
  long max_n = 0;
  {
    auto s = next();
    std::string key;
    if (!(s >> key >> max_n) || key != "max_n" || max_n < 0) corrupt(line_no, "bad max_n header");
  }

  struct RowHeader {
    std::size_t count;
    std::string digest;
  };
  std::vector<RowHeader> headers;
  for (long n = 1; n <= max_n; ++n) {
    auto s = next();
    std::string key, digest;
    long row_n = 0;
    std::size_t count = 0;
    if (!(s >> key >> row_n >> count >> digest) || key != "row" || row_n != n) {
      corrupt(line_no, "bad row header for row " + std::to_string(n));
    }
    if (count != static_cast<std::size_t>(max_genus(n)) + 1) {
      corrupt(line_no, "row " + std::to_string(n) + " declares " + std::to_string(count) +
                           " entries, expected " + std::to_string(max_genus(n) + 1));
    }
    headers.push_back({count, digest});
  }
  if (next().str() != "entries") corrupt(line_no, "missing entries marker");

  HTable table;
  for (long n = 1; n <= max_n; ++n) {
    std::vector<BigInt> row;
    for (std::size_t g = 0; g < headers[static_cast<std::size_t>(n - 1)].count; ++g) {
      auto s = next();
      long row_n = -1;
      std::size_t row_g = 0;
      std::string value, extra;
      if (!(s >> row_n >> row_g >> value) || (s >> extra)) corrupt(line_no, "malformed entry");
      if (row_n != n || row_g != g) {
        corrupt(line_no, "entry (" + std::to_string(row_n) + "," + std::to_string(row_g) +
                             ") out of order, expected (" + std::to_string(n) + "," +
                             std::to_string(g) + ")");
      }
      try {
        row.push_back(parse_bigint(value));
      } catch (const ParseError& e) {
        corrupt(line_no, e.what());
      }
    }
    if (hex64(row_digest(row)) != headers[static_cast<std::size_t>(n - 1)].digest) {
      corrupt(line_no, "digest mismatch in row " + std::to_string(n));
    }
    try {
      table.append_row(std::move(row));
    } catch (const std::exception& e) {
      corrupt(line_no, e.what());
    }
  }
  if (std::getline(in, line) && !line.empty()) corrupt(line_no + 1, "trailing data");
  return table;
}

void write_checkpoint(const HTable& table, const std::filesystem::path& path) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    write_checkpoint(table, out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

HTable read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CheckpointError("cannot open checkpoint " + path.string());
  return read_checkpoint(in);
}

void write_genus_csv(const HTable& table, std::ostream& out) {
  out << "n,g,C\n";
  for (long n = 1; n <= table.max_n(); ++n) {
    const auto dist = genus_distribution(table, n);
    for (std::size_t g = 0; g < dist.counts.size(); ++g) {
      out << n << ',' << g << ',' << dist.counts[g] << '\n';
    }
  }
}

void write_genus_json(const HTable& table, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (long n = 1; n <= table.max_n(); ++n) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& c : genus_distribution(table, n).counts) counts.push_back(to_decimal(c));
    rows.push_back(std::move(counts));
  }
  out << nlohmann::json{{"max_n", table.max_n()}, {"C", std::move(rows)}}.dump() << '\n';
}

}  // namespace cubicmaps
