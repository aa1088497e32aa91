#include "divnet/pajek.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "divnet/numfmt.hpp"

namespace divnet {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Cursor over one line, whitespace-delimited.
struct LineScanner {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  std::string_view token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    return text.substr(start, pos - start);
  }
  long integer(const char* what) {
    auto t = token();
    long value = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || p != t.data() + t.size())
      fail(line_no, std::string("expected ") + what + ", got '" + std::string(t) + "'");
    return value;
  }
  double real(const char* what) {
    auto t = token();
    char* end = nullptr;
    std::string buf(t);
    double value = std::strtod(buf.c_str(), &end);
    if (t.empty() || end != buf.c_str() + buf.size())
      fail(line_no, std::string("expected ") + what + ", got '" + std::string(t) + "'");
    return value;
  }
  // Quoted or bare label; trailing fields (coordinates etc.) are ignored
  // by the caller.
  std::string label() {
    skip_ws();
    if (pos < text.size() && text[pos] == '"') {
      std::size_t close = text.find('"', pos + 1);
      if (close == std::string_view::npos) fail(line_no, "unterminated quoted label");
      std::string out(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      return out;
    }
    return std::string(token());
  }
};

// Splits into logical lines, dropping blanks, %-comments and CR.
struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool next(LineScanner& out) {
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() : eol + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos) continue;
      if (line[first] == '%') continue;
      out = LineScanner{line, 0, line_no};
      return true;
    }
    return false;
  }
};

}  // namespace

bool operator==(const PajekNetwork& a, const PajekNetwork& b) {
  if (a.labels != b.labels || a.mode_split != b.mode_split) return false;
  auto key = [](const PajekLink& l) {
    return std::make_tuple(l.source, l.target, l.weight, l.kind == LinkKind::edge);
  };
  auto sa = a.links, sb = b.links;
  auto cmp = [&](const PajekLink& x, const PajekLink& y) { return key(x) < key(y); };
  std::sort(sa.begin(), sa.end(), cmp);
  std::sort(sb.begin(), sb.end(), cmp);
  return sa.size() == sb.size() &&
         std::equal(sa.begin(), sa.end(), sb.begin(),
                    [&](const PajekLink& x, const PajekLink& y) {
                      return key(x) == key(y);
                    });
}

PajekNetwork parse_net(std::string_view text) {
  LineReader reader{text};
  LineScanner line;

  if (!reader.next(line)) throw std::runtime_error("line 1: empty file");
  std::string head = lower(line.token());
  if (head != "*vertices")
    fail(line.line_no, "expected *Vertices header, got '" + head + "'");
  long n = line.integer("vertex count");
  if (n < 1) fail(line.line_no, "vertex count must be positive");
  std::optional<int> mode_split;
  if (!line.at_end()) {
    long r = line.integer("row-vertex count");
    if (r <= 0 || r >= n)
      fail(line.line_no, "2-mode split must satisfy 0 < r < n");
    mode_split = static_cast<int>(r);
  }

  PajekNetwork net;
  net.mode_split = mode_split;
  net.labels.assign(static_cast<std::size_t>(n), std::string());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);

  auto check_vertex = [&](long id, std::size_t line_no) {
    if (id < 1 || id > n)
      fail(line_no, "vertex id " + std::to_string(id) + " out of range 1.." +
                        std::to_string(n));
  };
  auto add_link = [&](long s, long t, double w, LinkKind kind,
                      std::size_t line_no) {
    check_vertex(s, line_no);
    check_vertex(t, line_no);
    if (w < 0.0) fail(line_no, "negative link weight");
    if (mode_split) {
      long r = *mode_split;
      if (!(s <= r && t > r))
        fail(line_no, "link " + std::to_string(s) + "->" + std::to_string(t) +
                          " violates the 2-mode split (rows 1.." +
                          std::to_string(r) + ")");
    }
    net.links.push_back(
        {static_cast<int>(s), static_cast<int>(t), w, kind});
  };

  enum class Section { vertices, arcs, edges, matrix };
  Section section = Section::vertices;
  long matrix_row = 0;
  const long matrix_rows = mode_split ? *mode_split : n;
  const long matrix_cols = mode_split ? n - *mode_split : n;

  while (reader.next(line)) {
    line.skip_ws();
    if (line.text[line.pos] == '*') {
      std::string name = lower(line.token());
      if (name == "*arcs")
        section = Section::arcs;
      else if (name == "*edges")
        section = Section::edges;
      else if (name == "*matrix") {
        section = Section::matrix;
        matrix_row = 0;
      } else
        fail(line.line_no, "unsupported section '" + name + "'");
      continue;
    }

    switch (section) {
      case Section::vertices: {
        long id = line.integer("vertex id");
        check_vertex(id, line.line_no);
        if (seen[static_cast<std::size_t>(id - 1)])
          fail(line.line_no, "duplicate vertex id " + std::to_string(id));
        seen[static_cast<std::size_t>(id - 1)] = true;
        std::string label;
        if (!line.at_end()) label = line.label();
        if (label.empty()) label = std::to_string(id);
        net.labels[static_cast<std::size_t>(id - 1)] = label;
        break;
      }
      case Section::arcs:
      case Section::edges: {
        long s = line.integer("source vertex id");
        long t = line.integer("target vertex id");
        double w = line.at_end() ? 1.0 : line.real("link weight");
        add_link(s, t, w,
                 section == Section::arcs ? LinkKind::arc : LinkKind::edge,
                 line.line_no);
        break;
      }
      case Section::matrix: {
        if (matrix_row >= matrix_rows)
          fail(line.line_no, "matrix has more than " +
                                 std::to_string(matrix_rows) + " rows");
        ++matrix_row;
        for (long c = 1; c <= matrix_cols; ++c) {
          double w = line.real("matrix cell");
          if (w < 0.0) fail(line.line_no, "negative link weight");
          if (w != 0.0) {
            long target = mode_split ? *mode_split + c : c;
            add_link(matrix_row, target, w, LinkKind::arc, line.line_no);
          }
        }
        if (!line.at_end())
          fail(line.line_no, "matrix row has more than " +
                                 std::to_string(matrix_cols) + " columns");
        break;
      }
    }
  }

  // Vertices without a line keep their id as label, Pajek style.
  for (std::size_t i = 0; i < net.labels.size(); ++i)
    if (net.labels[i].empty()) net.labels[i] = std::to_string(i + 1);
  return net;
}

std::string write_net(const PajekNetwork& net) {
  const int n = net.vertex_count();
  if (n < 1) throw std::invalid_argument("network has no vertices");
  if (net.mode_split && (*net.mode_split <= 0 || *net.mode_split >= n))
    throw std::invalid_argument("2-mode split out of range");

  std::ostringstream out;
  out << "*Vertices " << n;
  if (net.mode_split) out << ' ' << *net.mode_split;
  out << '\n';
  for (int i = 0; i < n; ++i) {
    const std::string& label = net.labels[static_cast<std::size_t>(i)];
    if (label.find('"') != std::string::npos)
      throw std::invalid_argument("label contains a quote: " + label);
    out << (i + 1) << " \"" << label << "\"\n";
  }

  auto emit = [&](LinkKind kind, const char* header) {
    bool any = false;
    for (const auto& l : net.links) {
      if (l.kind != kind) continue;
      if (!any) {
        out << header << '\n';
        any = true;
      }
      if (l.weight < 0.0) throw std::invalid_argument("negative link weight");
      out << l.source << ' ' << l.target << ' ' << format_full(l.weight)
          << '\n';
    }
  };
  emit(LinkKind::arc, "*Arcs");
  emit(LinkKind::edge, "*Edges");
  return out.str();
}

PajekNetwork read_net_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_net(buf.str());
}

void write_net_file(const PajekNetwork& net, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << write_net(net);
  if (!out) throw std::runtime_error("failed writing " + path);
}

TwoModeMatrix to_two_mode(const PajekNetwork& net) {
  const int n = net.vertex_count();
  std::vector<Triplet> cells;
  cells.reserve(net.links.size() * 2);

  if (net.is_two_mode()) {
    const int r = *net.mode_split;
    std::vector<std::string> rows(net.labels.begin(), net.labels.begin() + r);
    std::vector<std::string> cols(net.labels.begin() + r, net.labels.end());
    for (const auto& l : net.links) {
      if (l.source < 1 || l.source > r || l.target <= r || l.target > n)
        throw std::invalid_argument("link violates the 2-mode split");
      cells.push_back({static_cast<std::size_t>(l.source - 1),
                       static_cast<std::size_t>(l.target - 1 - r), l.weight});
    }
    return TwoModeMatrix(std::move(rows), std::move(cols), std::move(cells));
  }

  for (const auto& l : net.links) {
    if (l.source < 1 || l.source > n || l.target < 1 || l.target > n)
      throw std::invalid_argument("link references an unknown vertex");
    auto s = static_cast<std::size_t>(l.source - 1);
    auto t = static_cast<std::size_t>(l.target - 1);
    cells.push_back({s, t, l.weight});
    if (l.kind == LinkKind::edge) cells.push_back({t, s, l.weight});
  }
  return TwoModeMatrix(net.labels, net.labels, std::move(cells));
}

PajekNetwork from_two_mode(const TwoModeMatrix& m) {
  PajekNetwork net;
  const int r = static_cast<int>(m.row_count());
  net.mode_split = r;
  net.labels = m.row_labels();
  net.labels.insert(net.labels.end(), m.col_labels().begin(),
                    m.col_labels().end());
  for (const auto& t : m.triplets())
    net.links.push_back({static_cast<int>(t.row) + 1,
                         r + static_cast<int>(t.col) + 1, t.value,
                         LinkKind::arc});
  return net;
}

}  // namespace divnet
