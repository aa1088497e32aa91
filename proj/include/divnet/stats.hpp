#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divnet/table.hpp"

namespace divnet {

struct Correlation {
  double r = 0.0;
  double p = 1.0;  // two-tailed, Student-t approximation
  std::size_t n = 0;
};

// Product-moment correlation over the pairwise-complete observations
// (NaN marks a missing value). Undefined — and empty — when fewer than 3
// complete pairs remain or either side has zero variance.
std::optional<Correlation> pearson(std::span<const double> x,
                                   std::span<const double> y);

// Pearson on average ranks (ties share the mean rank), computed over the
// pairwise-complete observations.
std::optional<Correlation> spearman(std::span<const double> x,
                                    std::span<const double> y);

// Average ranks, 1-based; ties get the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> v);

enum class SortDirection { descending, ascending };

struct RankedRow {
  std::string unit;
  double value = 0.0;
};

// First k rows by `field` (missing values excluded), ties broken by unit
// label ascending. Throws on an unknown field.
std::vector<RankedRow> top_k(const DataTable& t, const std::string& field,
                             std::size_t k,
                             SortDirection direction = SortDirection::descending);

// Pairwise correlation matrix over every numeric column of the table.
struct CorrelationReport {
  std::vector<std::string> variables;
  // [i][j], i != j; empty where undefined
  std::vector<std::vector<std::optional<Correlation>>> pearson_r;
  std::vector<std::vector<std::optional<Correlation>>> spearman_rho;
};

CorrelationReport correlation_report(const DataTable& t);

// Square matrix layout: Spearman's rho above the diagonal, Pearson's r
// below, 1 on the diagonal; followed by pairwise-N and two-tailed-p
// blocks in the same arrangement.
std::string correlation_csv(const CorrelationReport& report);

// Log-binned histogram of the named columns (positive values; zeros get
// their own leading row), shared bin edges across columns.
std::string range_histogram_csv(const DataTable& t,
                                const std::vector<std::string>& fields,
                                std::size_t bins = 20);

}  // namespace divnet
