#include "divnet/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <unordered_map>

#include "divnet/pajek.hpp"
#include "divnet/parallel.hpp"
#include "divnet/similarity.hpp"

namespace divnet {

namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
public:
  StageTimer(RunLog& log, const char* stage)
      : log_(log), stage_(stage), start_(Clock::now()) {}
  ~StageTimer() {
    log_.stage_seconds.emplace_back(
        stage_, std::chrono::duration<double>(Clock::now() - start_).count());
  }

private:
  RunLog& log_;
  const char* stage_;
  Clock::time_point start_;
};

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

// Aligns an externally supplied co-occurrence matrix with the matrix's
// row labels (same label set, any order).
CoocMatrix align_cooc(const CoocMatrix& external,
                      const std::vector<std::string>& row_labels) {
  if (external.class_count() != row_labels.size())
    throw std::invalid_argument(
        "co-occurrence file covers " + std::to_string(external.class_count()) +
        " classes, matrix has " + std::to_string(row_labels.size()));
  std::unordered_map<std::string_view, std::size_t> pos;
  for (std::size_t i = 0; i < external.labels.size(); ++i)
    pos[external.labels[i]] = i;

  std::vector<std::size_t> map(row_labels.size());
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    auto it = pos.find(row_labels[i]);
    if (it == pos.end())
      throw std::invalid_argument("co-occurrence file lacks class '" +
                                  row_labels[i] + "'");
    map[i] = it->second;
  }

  CoocMatrix out{row_labels, SymMatrix(row_labels.size())};
  for (std::size_t i = 0; i < row_labels.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      out.cells.at(i, j) = external.cells(map[i], map[j]);
  return out;
}

}  // namespace

void write_text_file(const std::string& path, const std::string& text,
                     bool force) {
  if (!force && std::filesystem::exists(path))
    throw std::runtime_error(path + " exists; pass --force to overwrite");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

RunResult run(const RunConfig& config) {
  RunResult result;
  RunLog& log = result.log;

  PajekNetwork net = stage("parse", [&] {
    StageTimer t(log, "parse");
    return read_net_file(config.input_path);
  });

  TwoModeMatrix matrix = stage("build-matrix", [&] {
    StageTimer t(log, "build-matrix");
    TwoModeMatrix m = to_two_mode(net);
    if (config.drop_loops) {
      auto [clean, report] = drop_loops(m);
      log.loops_removed = report.removed_cells;
      log.loop_weight_removed = report.removed_weight;
      m = std::move(clean);
    }
    if (config.direction == Direction::cited) m = transpose(m);
    return m;
  });
  log.classes = matrix.row_count();
  log.units = matrix.col_count();
  log.nonzeros = matrix.nonzero_count();
  log.total_weight = matrix.total_weight();

  DisparityMatrix disparity = stage("disparity", [&] {
    StageTimer t(log, "disparity");
    CoocMatrix cooc =
        config.coocc_path
            ? align_cooc(cooc_from_network(read_net_file(*config.coocc_path)),
                         matrix.row_labels())
            : row_projection(matrix, config.threads);
    SymMatrix sim = config.measure == DisparityMeasure::cosine
                        ? cosine_similarity(cooc, config.threads)
                        : jaccard_similarity(matrix, config.threads);
    DisparityMatrix d = disparity_from_similarity(sim, matrix.row_labels());
    log.coherence = coherence(cooc, d);
    return d;
  });

  std::int64_t n_available = stage("n-policy", [&]() -> std::int64_t {
    switch (config.n_policy) {
      case NPolicy::matrix_rows:
        return static_cast<std::int64_t>(matrix.row_count());
      case NPolicy::max_observed: {
        std::size_t best = 0;
        for (std::size_t c = 0; c < matrix.col_count(); ++c)
          best = std::max(best, matrix.column(c).size());
        if (best == 0)
          throw std::invalid_argument(
              "max-observed N policy needs at least one nonzero column");
        return static_cast<std::int64_t>(best);
      }
      case NPolicy::explicit_value:
        if (config.n_explicit <= 0)
          throw std::invalid_argument("explicit N must be positive");
        return config.n_explicit;
    }
    throw std::logic_error("unreachable");
  });
  log.n_available = n_available;

  stage("indicators", [&] {
    StageTimer t(log, "indicators");
    result.rows.resize(matrix.col_count());
    parallel_for(matrix.col_count(), config.threads, [&](std::size_t c) {
      result.rows[c] =
          indicator_row(column_profile(matrix, c), disparity, n_available,
                        config.rs_params, config.gini_support);
    });
    return 0;
  });

  stage("serialize", [&] {
    StageTimer t(log, "serialize");
    if (config.join_path) {
      DataTable joined =
          join_outer(indicator_table(result.rows),
                     read_table_file(*config.join_path),
                     &log.unmatched_join_labels);
      result.csv = table_to_csv(joined, config.full_precision ? 0 : 6);
    } else {
      result.csv = indicators_csv(result.rows, config.full_precision);
    }
    if (!config.out_path.empty())
      write_text_file(config.out_path, result.csv, config.force_overwrite);
    return 0;
  });

  return result;
}

AnalyzeResult analyze_tables(const DataTable& indicators,
                             const DataTable* join_table, std::size_t top) {
  AnalyzeResult result;
  result.joined = join_table ? join_outer(indicators, *join_table,
                                          &result.unmatched_join_labels)
                             : indicators;

  result.correlations = correlation_report(result.joined);
  result.correlations_csv = correlation_csv(result.correlations);

  if (top > 0)
    for (const auto& col : result.joined.columns)
      result.rankings.emplace_back(col, top_k(result.joined, col, top));

  std::vector<std::string> range_fields;
  for (const char* f : {"rs", "div"})
    if (result.joined.column_index(f) >= 0) range_fields.push_back(f);
  if (!range_fields.empty())
    result.range_csv = range_histogram_csv(result.joined, range_fields);
  return result;
}

AnalyzeResult analyze(const AnalyzeConfig& config) {
  DataTable indicators = stage("read-indicators", [&] {
    return read_table_file(config.indicators_path);
  });
  std::optional<DataTable> join_table;
  if (config.join_path)
    join_table = stage("read-join",
                       [&] { return read_table_file(*config.join_path); });

  AnalyzeResult result = stage("analyze", [&] {
    return analyze_tables(indicators, join_table ? &*join_table : nullptr,
                          config.top);
  });

  stage("serialize", [&] {
    if (config.correlations_path)
      write_text_file(*config.correlations_path, result.correlations_csv,
                      config.force_overwrite);
    if (config.range_hist_path && !result.range_csv.empty())
      write_text_file(*config.range_hist_path, result.range_csv,
                      config.force_overwrite);
    return 0;
  });
  return result;
}

}  // namespace divnet
