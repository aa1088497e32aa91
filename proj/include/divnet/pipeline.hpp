#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "divnet/diversity.hpp"
#include "divnet/stats.hpp"
#include "divnet/table.hpp"

namespace divnet {

enum class Direction { citing, cited };
enum class DisparityMeasure { cosine, jaccard };
enum class NPolicy { matrix_rows, max_observed, explicit_value };

struct RunConfig {
  std::string input_path;
  Direction direction = Direction::citing;  // cited transposes the matrix
  DisparityMeasure measure = DisparityMeasure::cosine;
  bool drop_loops = false;
  GiniSupport gini_support = GiniSupport::nonzero_only;
  NPolicy n_policy = NPolicy::matrix_rows;
  std::int64_t n_explicit = 0;
  RSParams rs_params;
  std::optional<std::string> coocc_path;   // precomputed co-occurrence .net
  std::optional<std::string> join_path;    // external metrics CSV, label-keyed
  std::string out_path;                    // empty: don't write
  bool force_overwrite = false;
  bool full_precision = false;
  unsigned threads = 1;  // 0 = hardware concurrency
};

struct RunLog {
  std::size_t classes = 0;
  std::size_t units = 0;
  std::size_t nonzeros = 0;
  double total_weight = 0.0;
  std::size_t loops_removed = 0;
  double loop_weight_removed = 0.0;
  std::int64_t n_available = 0;
  double coherence = 0.0;
  std::vector<std::string> unmatched_join_labels;
  std::vector<std::pair<std::string, double>> stage_seconds;
};

struct RunResult {
  std::vector<IndicatorRow> rows;
  std::string csv;  // exactly what lands in out_path
  RunLog log;
};

// Errors from any stage carry the stage name.
class StageError : public std::runtime_error {
public:
  StageError(std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

private:
  std::string stage_;
};

// Full workflow: parse -> matrix -> disparity -> per-column indicators ->
// CSV. Deterministic: the same config and input produce byte-identical
// CSV at any thread count.
RunResult run(const RunConfig& config);

struct AnalyzeConfig {
  std::string indicators_path;
  std::optional<std::string> join_path;
  std::size_t top = 0;  // 0: no ranking tables
  std::optional<std::string> correlations_path;
  std::optional<std::string> range_hist_path;
  bool force_overwrite = false;
};

struct AnalyzeResult {
  DataTable joined;
  CorrelationReport correlations;
  std::string correlations_csv;
  // field -> ranked rows, for every numeric column, in column order
  std::vector<std::pair<std::string, std::vector<RankedRow>>> rankings;
  std::string range_csv;
  std::vector<std::string> unmatched_join_labels;
};

AnalyzeResult analyze(const AnalyzeConfig& config);

// Testable core of analyze: join (optional), correlations, rankings,
// range histogram over rs/div when present.
AnalyzeResult analyze_tables(const DataTable& indicators,
                             const DataTable* join_table, std::size_t top);

// Refuses to clobber an existing file unless forced.
void write_text_file(const std::string& path, const std::string& text,
                     bool force);

}  // namespace divnet
