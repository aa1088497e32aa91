#include "divnet/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace divnet {

namespace {

void check_unique(const std::vector<std::string>& labels, const char* axis) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second)
      throw std::invalid_argument(std::string("duplicate ") + axis +
                                  " label: " + l);
  }
}

}  // namespace

TwoModeMatrix::TwoModeMatrix(std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels,
                             std::vector<Triplet> cells)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  if (row_labels_.empty() || col_labels_.empty())
    throw std::invalid_argument("matrix must have at least one row and column");
  check_unique(row_labels_, "row");
  check_unique(col_labels_, "column");

  const std::size_t R = row_labels_.size();
  const std::size_t U = col_labels_.size();
  for (const auto& t : cells) {
    if (t.row >= R || t.col >= U)
      throw std::invalid_argument("cell index out of range");
    if (t.value < 0.0)
      throw std::invalid_argument("negative cell weight");
  }

  std::sort(cells.begin(), cells.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });

  col_ptr_.assign(U + 1, 0);
  entries_.reserve(cells.size());
  std::size_t i = 0;
  for (std::size_t c = 0; c < U; ++c) {
    while (i < cells.size() && cells[i].col == c) {
      std::size_t r = cells[i].row;
      double v = 0.0;
      while (i < cells.size() && cells[i].col == c && cells[i].row == r)
        v += cells[i++].value;
      if (v > 0.0) entries_.push_back({r, v});
    }
    col_ptr_[c + 1] = entries_.size();
  }
}

std::span<const MatrixEntry> TwoModeMatrix::column(std::size_t col) const {
  if (col >= col_count()) throw std::out_of_range("column index out of range");
  return {entries_.data() + col_ptr_[col], col_ptr_[col + 1] - col_ptr_[col]};
}

double TwoModeMatrix::total_weight() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.value;
  return sum;
}

std::vector<Triplet> TwoModeMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(entries_.size());
  for (std::size_t c = 0; c < col_count(); ++c)
    for (const auto& e : column(c)) out.push_back({e.row, c, e.value});
  return out;
}

ColumnProfile column_profile(const TwoModeMatrix& m, std::size_t col) {
  if (col >= m.col_count())
    throw std::out_of_range("column index out of range");
  ColumnProfile p;
  p.unit_label = m.col_labels()[col];
  p.entries = m.column(col);
  for (const auto& e : p.entries) p.total += e.value;
  return p;
}

std::vector<double> ColumnProfile::values() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.value);
  return out;
}

std::vector<double> ColumnProfile::proportions() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.value / total);
  return out;
}

TwoModeMatrix transpose(const TwoModeMatrix& m) {
  std::vector<Triplet> cells = m.triplets();
  for (auto& t : cells) std::swap(t.row, t.col);
  return TwoModeMatrix(m.col_labels(), m.row_labels(), std::move(cells));
}

std::pair<TwoModeMatrix, LoopReport> drop_loops(const TwoModeMatrix& m) {
  if (m.row_count() != m.col_count())
    throw std::invalid_argument("drop_loops requires a square matrix");
  std::unordered_set<std::string_view> rows(m.row_labels().begin(),
                                            m.row_labels().end());
  for (const auto& l : m.col_labels())
    if (!rows.count(l))
      throw std::invalid_argument(
          "drop_loops requires matching row/column label sets (missing: " + l +
          ")");

  LoopReport report;
  std::vector<Triplet> kept;
  for (const auto& t : m.triplets()) {
    if (m.row_labels()[t.row] == m.col_labels()[t.col]) {
      ++report.removed_cells;
      report.removed_weight += t.value;
    } else {
      kept.push_back(t);
    }
  }
  return {TwoModeMatrix(m.row_labels(), m.col_labels(), std::move(kept)),
          report};
}

}  // namespace divnet
