#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace divnet {

struct MatrixEntry {
  std::size_t row = 0;
  double value = 0.0;
};

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;
};

// Sparse nonnegative classes (rows) x units (columns) matrix with labels.
// Stored column-major: columns are the unit of work for every indicator,
// and of parallelism in the pipeline. Immutable after construction.
class TwoModeMatrix {
public:
  // Duplicate (row, col) triplets are summed; zero cells are dropped.
  // Throws std::invalid_argument on negative weights, out-of-range
  // indices, duplicate labels, or an empty axis.
  TwoModeMatrix(std::vector<std::string> row_labels,
                std::vector<std::string> col_labels,
                std::vector<Triplet> cells);

  std::size_t row_count() const { return row_labels_.size(); }
  std::size_t col_count() const { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  // Nonzero cells of one column, row indices ascending.
  std::span<const MatrixEntry> column(std::size_t col) const;

  std::size_t nonzero_count() const { return entries_.size(); }
  double total_weight() const;

  std::vector<Triplet> triplets() const;

private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::size_t> col_ptr_;  // col_count()+1 offsets into entries_
  std::vector<MatrixEntry> entries_;
};

// Nonzero entries of one unit's column, plus the derived counts the
// indicators need. Views into the parent matrix; does not outlive it.
struct ColumnProfile {
  std::string_view unit_label;
  std::span<const MatrixEntry> entries;
  double total = 0.0;

  std::size_t class_count() const { return entries.size(); }  // n_c
  std::vector<double> values() const;
  std::vector<double> proportions() const;  // value / total, sums to 1
};

ColumnProfile column_profile(const TwoModeMatrix& m, std::size_t col);

// Rows and columns swapped, labels following their axes.
TwoModeMatrix transpose(const TwoModeMatrix& m);

struct LoopReport {
  std::size_t removed_cells = 0;
  double removed_weight = 0.0;
};

// Removes cells whose row label equals their column label. Requires the
// row and column label sets to coincide (a square, self-citation style
// matrix); throws std::invalid_argument otherwise.
std::pair<TwoModeMatrix, LoopReport> drop_loops(const TwoModeMatrix& m);

}  // namespace divnet
