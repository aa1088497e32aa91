#include "divnet/table.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "divnet/numfmt.hpp"

namespace divnet {

namespace {

std::vector<std::string> split_csv_line(std::string_view line,
                                        std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted)
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": unterminated quoted CSV field");
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

int DataTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

DataTable read_table_csv(std::string_view text) {
  DataTable t;
  std::size_t pos = 0, line_no = 0;
  bool header_done = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    auto fields = split_csv_line(line, line_no);
    if (!header_done) {
      if (fields.size() < 2)
        throw std::runtime_error("CSV header needs a label and data column");
      t.columns.assign(fields.begin() + 1, fields.end());
      t.values.resize(t.columns.size());
      header_done = true;
      continue;
    }
    if (fields.size() != t.columns.size() + 1)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected " +
                               std::to_string(t.columns.size() + 1) +
                               " fields, got " + std::to_string(fields.size()));
    t.units.push_back(fields[0]);
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const std::string& f = fields[c + 1];
      if (f.empty()) {
        t.values[c].push_back(std::nullopt);
        continue;
      }
      char* end = nullptr;
      double v = std::strtod(f.c_str(), &end);
      if (end != f.c_str() + f.size())
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": not a number: '" + f + "'");
      t.values[c].push_back(v);
    }
  }
  if (!header_done) throw std::runtime_error("empty CSV");
  return t;
}

DataTable read_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_table_csv(buf.str());
}

std::string table_to_csv(const DataTable& t, int sig_digits) {
  std::ostringstream out;
  out << "unit";
  for (const auto& c : t.columns) out << ',' << csv_field(c);
  out << '\n';
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    out << csv_field(t.units[r]);
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      out << ',';
      if (t.values[c][r])
        out << (sig_digits > 0 ? format_sig(*t.values[c][r], sig_digits)
                               : format_full(*t.values[c][r]));
    }
    out << '\n';
  }
  return out.str();
}

DataTable join_outer(const DataTable& left, const DataTable& right,
                     std::vector<std::string>* unmatched) {
  auto check_unique_units = [](const DataTable& t, const char* side) {
    std::unordered_set<std::string_view> seen;
    for (const auto& u : t.units)
      if (!seen.insert(u).second)
        throw std::runtime_error(std::string("duplicate unit label in ") +
                                 side + " table: " + u);
  };
  check_unique_units(left, "left");
  check_unique_units(right, "right");
  for (const auto& c : right.columns)
    if (left.column_index(c) >= 0)
      throw std::runtime_error("duplicate column in join: " + c);

  DataTable out = left;
  out.columns.insert(out.columns.end(), right.columns.begin(),
                     right.columns.end());

  std::unordered_map<std::string_view, std::size_t> row_of;
  for (std::size_t r = 0; r < out.units.size(); ++r) row_of[out.units[r]] = r;

  // Right-only units are appended, keeping right order.
  for (const auto& u : right.units)
    if (!row_of.count(u)) {
      if (unmatched) unmatched->push_back(u);
      row_of[u] = out.units.size();
      out.units.push_back(u);
    }
  for (auto& col : out.values) col.resize(out.units.size());

  for (const auto& rcol : right.values) {
    std::vector<std::optional<double>> col(out.units.size());
    for (std::size_t r = 0; r < right.units.size(); ++r)
      col[row_of[right.units[r]]] = rcol[r];
    out.values.push_back(std::move(col));
  }
  return out;
}

DataTable indicator_table(const std::vector<IndicatorRow>& rows) {
  DataTable t;
  t.columns = {"rs",        "true_div",     "div",     "gini",
               "gini_simpson", "shannon",   "disparity", "variety_rel",
               "variety_abs", "n_available"};
  t.values.resize(t.columns.size());
  for (const auto& r : rows) {
    t.units.push_back(r.unit_label);
    t.values[0].push_back(r.rs);
    t.values[1].push_back(r.true_diversity
                              ? std::optional<double>(*r.true_diversity)
                              : std::nullopt);
    t.values[2].push_back(r.div);
    t.values[3].push_back(r.gini);
    t.values[4].push_back(r.gini_simpson);
    t.values[5].push_back(r.shannon);
    t.values[6].push_back(r.disparity);
    t.values[7].push_back(r.variety_rel);
    t.values[8].push_back(static_cast<double>(r.variety_abs));
    t.values[9].push_back(static_cast<double>(r.n_classes_available));
  }
  return t;
}

std::string indicators_csv(const std::vector<IndicatorRow>& rows,
                           bool full_precision) {
  std::ostringstream out;
  out << "unit,rs,true_div,div,gini,gini_simpson,shannon,disparity,"
         "variety_rel,variety_abs,n_available\n";
  auto num = [&](double v) {
    return full_precision ? format_full(v) : format_sig(v, 6);
  };
  for (const auto& r : rows) {
    out << csv_field(r.unit_label) << ',' << num(r.rs) << ',';
    if (r.true_diversity) out << num(*r.true_diversity);
    out << ',' << num(r.div) << ',' << num(r.gini) << ',' << num(r.gini_simpson)
        << ',' << num(r.shannon) << ',' << num(r.disparity) << ','
        << num(r.variety_rel) << ',' << r.variety_abs << ','
        << r.n_classes_available << '\n';
  }
  return out.str();
}

}  // namespace divnet
