#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divnet/diversity.hpp"

namespace divnet {

// Column-oriented numeric table keyed by unit label. Missing cells are
// empty optionals and serialize as empty CSV fields.
struct DataTable {
  std::vector<std::string> units;
  std::vector<std::string> columns;
  // values[col][row]
  std::vector<std::vector<std::optional<double>>> values;

  std::size_t row_count() const { return units.size(); }
  int column_index(std::string_view name) const;
};

// First CSV column is the unit label, the rest are numeric (or empty).
DataTable read_table_csv(std::string_view text);
DataTable read_table_file(const std::string& path);

// sig_digits <= 0 means full (round-trip) precision.
std::string table_to_csv(const DataTable& t, int sig_digits = 6);

// Label-keyed outer join; right-hand columns are appended. Duplicate unit
// labels within either table are an error, as are duplicate column names
// across them. Labels only present in one side get empty cells on the
// other; `unmatched` (optional) collects right-side labels missing on the
// left.
DataTable join_outer(const DataTable& left, const DataTable& right,
                     std::vector<std::string>* unmatched = nullptr);

DataTable indicator_table(const std::vector<IndicatorRow>& rows);

// The pipeline's output CSV (header fixed, one row per unit).
std::string indicators_csv(const std::vector<IndicatorRow>& rows,
                           bool full_precision = false);

}  // namespace divnet
