#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bicseek/bicluster.hpp"
#include "bicseek/datagen.hpp"
#include "bicseek/evolution.hpp"
#include "bicseek/matrix.hpp"

namespace bicseek {

/// Raised on any malformed input file; the message carries the position.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tab-separated matrix: header row of column labels (with a leading corner
/// cell), then one line per row of label + values. Values are written with 17
/// significant digits so parsing them back is exact.
ExpressionMatrix parse_matrix_tsv(const std::filesystem::path& path);
void write_matrix_tsv(const std::filesystem::path& path, const ExpressionMatrix& m);

/// Canonical JSON: {"biclusters":[{"rows":[...],"cols":[...]}]} with sorted
/// indices. The writer's output is byte-stable for a given set.
std::string biclusters_to_json(const BiclusterSet& set);
void write_biclusters(const std::filesystem::path& path, const BiclusterSet& set);

/// Reads the canonical JSON, or the plain-text ground-truth dialect of
/// stanzas with "rows: i i i" / "cols: j j j" lines separated by blank lines.
BiclusterSet parse_biclusters(const std::filesystem::path& path);
BiclusterSet parse_biclusters_text(const std::string& text);

void write_run_report(const std::filesystem::path& path, const RunReport& report);
RunReport parse_run_report(const std::filesystem::path& path);

/// One generated dataset file pair inside a benchmark tree.
struct ReplicateEntry {
  std::size_t index = 0;
  std::string matrix_path;  // relative to the manifest directory
  std::string truth_path;
  std::uint64_t seed = 0;
};

struct CaseEntry {
  std::string name;
  ScenarioSpec spec;
  std::vector<ReplicateEntry> replicates;
};

struct Manifest {
  std::string scenario;
  std::vector<CaseEntry> cases;
};

void write_manifest(const std::filesystem::path& path, const Manifest& manifest);
Manifest parse_manifest(const std::filesystem::path& path);

/// One row of the benchmark results table. Metric fields are empty when the
/// dataset failed instead of producing a score.
struct BenchRecord {
  std::string dataset_path;
  std::string scenario;
  std::size_t replicate = 0;
  std::optional<double> ce;
  std::optional<double> recovery;
  std::optional<double> relevance;
  double wall_time_seconds = 0.0;
  std::size_t generations = 0;
  std::string termination;  // "converged" or "budget"
};

extern const char* const kBenchCsvHeader;

void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_bench_csv(const std::filesystem::path& path);

/// Per-scenario aggregate mirroring the per-group breakdowns of the results
/// table: median/mean CE over scored rows plus mean wall time.
struct ScenarioSummary {
  std::string scenario;
  std::size_t datasets = 0;
  std::optional<double> median_ce;
  std::optional<double> mean_ce;
  double mean_wall_time_seconds = 0.0;
};

std::vector<ScenarioSummary> summarize_records(const std::vector<BenchRecord>& records);
void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<ScenarioSummary>& summaries);

}  // namespace bicseek
