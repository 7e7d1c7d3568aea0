#include "cubicmaps/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "cubicmaps/asymptotics.hpp"
#include "cubicmaps/cubic_recursion.hpp"
#include "cubicmaps/rotation_counts.hpp"
#include "cubicmaps/statistics.hpp"
#include "cubicmaps/table_io.hpp"
#include "cubicmaps/verify.hpp"

namespace cubicmaps {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  long max_n = 0;
  std::optional<long> n;
  std::vector<double> y_grid{1.0};
  long N = 100000;
  double epsilon = 0.2;
  std::string checkpoint;
  std::string out;
  std::string format = "csv";
  unsigned workers = 1;
  long stride = 25;
  std::string strategy = "kronecker";
  bool quiet = false;

  // verify
  long verify_max_n = 30;
  long lemma_n = 1000;
  // kestimate
  double threshold = 1e-3;
  // stats
  std::string table = "moments";
  long k_terms = 100000;
  // count
  std::string family = "regular";
  long degree = 3;
};

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

// A small table emitted as CSV or as a JSON array of objects. Cells are kept
// as strings so counts stay exact in both encodings.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& row : rows_) {
        json obj = json::object();
        for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      out << arr.dump(1) << '\n';
      return;
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(columns_);
    for (const auto& row : rows_) line(row);
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

// Writes to --out when given, otherwise to the data stream.
template <class Fn>
void emit(const RunConfig& cfg, std::ostream& out, Fn&& write) {
  if (cfg.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.out, std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + cfg.out + " for writing");
  write(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing " + cfg.out);
}

HTable load_table(const RunConfig& cfg, long max_n, std::ostream& err) {
  if (max_n < 1) throw UsageError("--max-n must be at least 1");
  if (cfg.stride < 1) throw UsageError("--stride must be at least 1");
  BuildOptions options;
  if (!cfg.checkpoint.empty()) options.checkpoint = cfg.checkpoint;
  options.checkpoint_stride = cfg.stride;
  options.workers = cfg.workers;
  options.strategy = parse_mul_strategy(cfg.strategy);
  if (!cfg.quiet) {
    options.on_row = [&err, stride = cfg.stride](const BuildProgress& p) {
      if (p.row % stride != 0 && p.row != p.max_n) return;
      err << "row " << p.row << "/" << p.max_n << " elapsed " << std::fixed << std::setprecision(1)
          << p.elapsed.count() << "s eta " << p.eta.count() << "s\n"
          << std::defaultfloat;
    };
  }
  return build_h_table(max_n, options);
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const HTable table = load_table(cfg, cfg.max_n, err);
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == "json") {
      write_genus_json(table, o);
    } else {
      write_genus_csv(table, o);
    }
  });
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyConfig vc;
  vc.max_n = cfg.verify_max_n;
  vc.lemma_n = cfg.lemma_n;
  vc.workers = cfg.workers;
  if (vc.max_n < 1) throw UsageError("--max-n must be at least 1");
  if (vc.lemma_n < 2) throw UsageError("--lemma-n must be at least 2");
  const auto results = run_verification(vc);

  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == "json") {
      json arr = json::array();
      for (const auto& r : results) {
        arr.push_back({{"check", r.name}, {"status", r.passed ? "PASS" : "FAIL"}, {"detail", r.detail}});
      }
      o << arr.dump(1) << '\n';
    } else {
      for (const auto& r : results) {
        o << r.name << ": " << (r.passed ? "PASS" : "FAIL");
        if (!r.detail.empty()) o << " (" << r.detail << ")";
        o << '\n';
      }
    }
  });
  auto failed = std::find_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  if (failed != results.end()) {
    err << "verification failed: " << failed->name << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_kestimate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  for (double y : cfg.y_grid) {
    if (!(y > 0 && y < 2)) throw UsageError("--y values must lie in (0, 2), got " + fmt(y));
  }
  if (cfg.N < 14) throw UsageError("--N must be at least 14");
  const auto seqs = h_sequences(cfg.y_grid, cfg.N, cfg.workers);
  Table t({"y", "N", "raw", "extrapolated", "error_indicator"});
  for (const auto& seq : seqs) {
    const KEstimate e = estimate_K(seq, cfg.threshold);
    if (!e.converged) {
      err << "warning: K(" << fmt(e.y) << ") not converged, error indicator " << fmt(e.error_indicator)
          << " > " << fmt(cfg.threshold) << '\n';
    }
    t.add({fmt(e.y), std::to_string(e.N), fmt(e.raw), fmt(e.extrapolated), fmt(e.error_indicator)});
  }
  emit(cfg, out, [&](std::ostream& o) { t.write(o, cfg.format); });
  return kExitOk;
}

std::vector<double> default_t_grid() { return uniform_grid(-3, 3, 0.25); }

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const HTable table = load_table(cfg, cfg.max_n, err);
  if (cfg.n && (*cfg.n < 1 || *cfg.n > table.max_n())) {
    throw UsageError("no table row for n = " + std::to_string(*cfg.n) + " (max_n = " +
                     std::to_string(table.max_n()) + ")");
  }
  const long lo = cfg.n.value_or(1), hi = cfg.n.value_or(table.max_n());

  if (cfg.table == "moments") {
    Table t({"n", "mean", "mean_float", "variance", "variance_float", "predicted_mean",
             "predicted_variance", "mean_ratio", "variance_ratio", "face_mean", "face_variance",
             "ks_distance"});
    for (long n = lo; n <= hi; ++n) {
      const auto dist = genus_distribution(table, n);
      const auto g = genus_stats(dist);
      const auto f = region_stats(face_distribution(table, n));
      const double ln_n = std::log(static_cast<double>(n));
      const double pm = (static_cast<double>(n) - ln_n) / 2, pv = ln_n / 4;
      const std::string ks = n >= 2 ? fmt(normality_report(dist, {}).ks_distance_exact) : "";
      t.add({std::to_string(n), to_string(g.mean), fmt(g.mean_value), to_string(g.variance),
             fmt(g.variance_value), fmt(pm), fmt(pv), n >= 2 ? fmt(g.mean_value / pm) : "",
             n >= 2 ? fmt(g.variance_value / pv) : "", to_string(f.mean), to_string(f.variance), ks});
    }
    emit(cfg, out, [&](std::ostream& o) { t.write(o, cfg.format); });
  } else if (cfg.table == "normality" || cfg.table == "cdf") {
    const auto grid = default_t_grid();
    Table summary({"n", "sup_distance_centered", "sup_distance_standardized", "ks_distance"});
    Table cdf({"n", "t", "cdf_centered", "cdf_standardized", "normal_cdf"});
    for (long n = std::max(lo, 2L); n <= hi; ++n) {
      const auto r = normality_report(genus_distribution(table, n), grid);
      summary.add({std::to_string(n), fmt(r.sup_distance_asymptotic), fmt(r.sup_distance_exact),
                   fmt(r.ks_distance_exact)});
      for (std::size_t i = 0; i < r.t.size(); ++i) {
        cdf.add({std::to_string(n), fmt(r.t[i]), fmt(r.cdf_asymptotic[i]), fmt(r.cdf_exact[i]),
                 fmt(standard_normal_cdf(r.t[i]))});
      }
    }
    emit(cfg, out, [&](std::ostream& o) { (cfg.table == "cdf" ? cdf : summary).write(o, cfg.format); });
  } else if (cfg.table == "ratios") {
    if (!(cfg.epsilon > 0 && cfg.epsilon < 1)) throw UsageError("--epsilon must lie in (0, 1)");
    KEstimator k(cfg.k_terms);
    Table t({"n", "g", "exact", "asym", "ratio"});
    for (long n = std::max(lo, 2L); n <= hi; ++n) {
      const auto dist = genus_distribution(table, n);
      for (long g = 0; g < static_cast<long>(dist.counts.size()); ++g) {
        const double v = genus_window_ratio(n, g);
        if (v < cfg.epsilon || v > 2 - cfg.epsilon) continue;
        const double log_asym = log_high_genus_asym(n, g, std::ref(k), cfg.epsilon);
        const BigInt& exact = dist.counts[static_cast<std::size_t>(g)];
        t.add({std::to_string(n), std::to_string(g), to_decimal(exact), fmt(std::exp(log_asym)),
               fmt(std::exp(log_abs(exact) - log_asym))});
      }
    }
    emit(cfg, out, [&](std::ostream& o) { t.write(o, cfg.format); });
  } else {
    throw UsageError("unknown --table '" + cfg.table + "'");
  }
  return kExitOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const long hi = cfg.n.value_or(cfg.max_n);
  const long lo = cfg.n ? *cfg.n : 1;
  if (hi < 1) throw UsageError("give --n or --max-n (at least 1)");

  Table t({"family", "size", "exact", "asym", "ratio"});
  for (long size = lo; size <= hi; ++size) {
    BigInt exact;
    std::optional<double> log_asym;
    std::string name = cfg.family;
    if (cfg.family == "total") {
      exact = total_maps_exact(size);
      log_asym = log_total_maps_asym(size);
    } else if (cfg.family == "bouquet") {
      exact = bouquet_count(size);
    } else if (cfg.family == "regular" || cfg.family == "cubic") {
      const RegularFamily fam{cfg.family == "cubic" ? 3 : cfg.degree};
      if (fam.degree < 2) throw UsageError("--degree must be at least 2");
      name = "regular-" + std::to_string(fam.degree);
      exact = regular_maps_exact(fam, size);
      if (fam.degree >= 3) log_asym = log_regular_maps_asym(fam, size);
    } else {
      throw UsageError("unknown --family '" + cfg.family + "'");
    }
    t.add({name, std::to_string(size), to_decimal(exact), log_asym ? fmt(std::exp(*log_asym)) : "",
           log_asym ? fmt(ratio_to_asym(exact, *log_asym)) : ""});
  }
  emit(cfg, out, [&](std::ostream& o) { t.write(o, cfg.format); });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact genus distributions and asymptotics of rooted cubic maps", "cubicmaps"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname("CUBICMAPS_FORMAT");
    sub->add_option("--out", cfg.out, "Output file (default: standard output)")->envname("CUBICMAPS_OUT");
    sub->add_option("--workers", cfg.workers, "Worker threads")
        ->check(CLI::Range(1u, 1024u))
        ->envname("CUBICMAPS_WORKERS");
  };
  auto table_opts = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--max-n", cfg.max_n, "Largest n in the table")->envname("CUBICMAPS_MAX_N");
    if (required) opt->required();
    sub->add_option("--checkpoint", cfg.checkpoint, "Checkpoint file to resume from and update")
        ->envname("CUBICMAPS_CHECKPOINT");
    sub->add_option("--stride", cfg.stride, "Rows between checkpoint writes")->envname("CUBICMAPS_STRIDE");
    sub->add_option("--strategy", cfg.strategy, "Convolution strategy")
        ->check(CLI::IsMember({"schoolbook", "karatsuba", "kronecker"}))
        ->envname("CUBICMAPS_STRATEGY");
    sub->add_flag("--quiet", cfg.quiet, "No progress output");
  };

  auto* table = app.add_subcommand("table", "Build the genus table and export C(n,g)");
  common(table);
  table_opts(table, true);

  auto* verify = app.add_subcommand("verify", "Run the cross-pipeline, oracle and bound checks");
  common(verify);
  verify->add_option("--max-n", cfg.verify_max_n, "Rows for the exact cross-checks")->capture_default_str()->envname("CUBICMAPS_MAX_N");
  verify->add_option("--lemma-n", cfg.lemma_n, "Length of the h_n bound sweep")->capture_default_str();

  auto* kest = app.add_subcommand("kestimate", "Estimate K(y) = lim h_n(y)");
  common(kest);
  kest->add_option("--y", cfg.y_grid, "Points in (0,2)")->envname("CUBICMAPS_Y");
  kest->add_option("--N", cfg.N, "Sequence length")->capture_default_str()->envname("CUBICMAPS_N");
  kest->add_option("--threshold", cfg.threshold, "Non-convergence warning threshold")->capture_default_str();

  auto* stats = app.add_subcommand("stats", "Moments, normality and high-genus ratio tables");
  common(stats);
  table_opts(stats, true);
  stats->add_option("--n", cfg.n, "Only this n");
  stats->add_option("--table", cfg.table, "moments | normality | cdf | ratios")->capture_default_str();
  stats->add_option("--epsilon", cfg.epsilon, "Window margin for the high-genus formula")->capture_default_str()
      ->envname("CUBICMAPS_EPSILON");
  stats->add_option("--N", cfg.k_terms, "Sequence length for K estimates")->capture_default_str()->envname("CUBICMAPS_N");

  auto* count = app.add_subcommand("count", "Map counts disregarding genus");
  common(count);
  count->add_option("--family", cfg.family, "total | bouquet | regular | cubic")->capture_default_str();
  count->add_option("--degree", cfg.degree, "Vertex degree for --family regular")->capture_default_str();
  count->add_option("--n", cfg.n, "Single size");
  count->add_option("--max-n", cfg.max_n, "Sweep sizes 1..max-n")->envname("CUBICMAPS_MAX_N");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*kest) return cmd_kestimate(cfg, out, err);
    if (*stats) return cmd_stats(cfg, out, err);
    if (*count) return cmd_count(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace cubicmaps
