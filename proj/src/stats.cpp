#include "divnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "divnet/numfmt.hpp"

namespace divnet {

namespace {

double two_tailed_p(double r, std::size_t n) {
  double denom = 1.0 - r * r;
  if (denom <= 0.0) return std::numeric_limits<double>::min();
  double t = std::abs(r) * std::sqrt(static_cast<double>(n - 2) / denom);
  boost::math::students_t dist(static_cast<double>(n - 2));
  double p = 2.0 * boost::math::cdf(boost::math::complement(dist, t));
  if (p > 1.0) p = 1.0;
  if (p <= 0.0) p = std::numeric_limits<double>::min();
  return p;
}

std::optional<Correlation> pearson_complete(const std::vector<double>& x,
                                            const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 3) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  double r = sxy / std::sqrt(sxx * syy);
  r = std::clamp(r, -1.0, 1.0);
  return Correlation{r, two_tailed_p(r, n), n};
}

// Pairwise deletion: keep positions where both sides are present.
void complete_pairs(std::span<const double> x, std::span<const double> y,
                    std::vector<double>& cx, std::vector<double>& cy) {
  if (x.size() != y.size())
    throw std::invalid_argument("correlation inputs differ in length");
  cx.clear();
  cy.clear();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!std::isnan(x[i]) && !std::isnan(y[i])) {
      cx.push_back(x[i]);
      cy.push_back(y[i]);
    }
}

}  // namespace

std::optional<Correlation> pearson(std::span<const double> x,
                                   std::span<const double> y) {
  std::vector<double> cx, cy;
  complete_pairs(x, y, cx, cy);
  return pearson_complete(cx, cy);
}

std::vector<double> average_ranks(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    double mean_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

std::optional<Correlation> spearman(std::span<const double> x,
                                    std::span<const double> y) {
  std::vector<double> cx, cy;
  complete_pairs(x, y, cx, cy);
  if (cx.size() < 3) return std::nullopt;
  return pearson_complete(average_ranks(cx), average_ranks(cy));
}

std::vector<RankedRow> top_k(const DataTable& t, const std::string& field,
                             std::size_t k, SortDirection direction) {
  int col = t.column_index(field);
  if (col < 0) throw std::invalid_argument("unknown field: " + field);

  std::vector<RankedRow> rows;
  for (std::size_t r = 0; r < t.row_count(); ++r)
    if (t.values[static_cast<std::size_t>(col)][r])
      rows.push_back({t.units[r], *t.values[static_cast<std::size_t>(col)][r]});

  std::sort(rows.begin(), rows.end(), [&](const RankedRow& a, const RankedRow& b) {
    if (a.value != b.value)
      return direction == SortDirection::descending ? a.value > b.value
                                                    : a.value < b.value;
    return a.unit < b.unit;
  });
  if (rows.size() > k) rows.resize(k);
  return rows;
}

CorrelationReport correlation_report(const DataTable& t) {
  CorrelationReport rep;
  rep.variables = t.columns;
  const std::size_t k = t.columns.size();
  rep.pearson_r.assign(k, std::vector<std::optional<Correlation>>(k));
  rep.spearman_rho.assign(k, std::vector<std::optional<Correlation>>(k));

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<double>> cols(k);
  for (std::size_t c = 0; c < k; ++c) {
    cols[c].reserve(t.row_count());
    for (const auto& v : t.values[c]) cols[c].push_back(v ? *v : nan);
  }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto r = pearson(cols[i], cols[j]);
      auto rho = spearman(cols[i], cols[j]);
      rep.pearson_r[i][j] = rep.pearson_r[j][i] = r;
      rep.spearman_rho[i][j] = rep.spearman_rho[j][i] = rho;
    }
  return rep;
}

std::string correlation_csv(const CorrelationReport& rep) {
  const std::size_t k = rep.variables.size();
  std::ostringstream out;

  auto header = [&](const char* title) {
    out << csv_field(title);
    for (const auto& v : rep.variables) out << ',' << csv_field(v);
    out << '\n';
  };

  // rho upper triangle, r lower triangle
  header("correlation");
  for (std::size_t i = 0; i < k; ++i) {
    out << csv_field(rep.variables[i]);
    for (std::size_t j = 0; j < k; ++j) {
      out << ',';
      if (i == j) {
        out << 1;
      } else if (i < j) {
        if (rep.spearman_rho[i][j]) out << format_sig(rep.spearman_rho[i][j]->r, 6);
      } else {
        if (rep.pearson_r[i][j]) out << format_sig(rep.pearson_r[i][j]->r, 6);
      }
    }
    out << '\n';
  }

  out << '\n';
  header("n");
  for (std::size_t i = 0; i < k; ++i) {
    out << csv_field(rep.variables[i]);
    for (std::size_t j = 0; j < k; ++j) {
      out << ',';
      if (i != j && rep.pearson_r[i][j]) out << rep.pearson_r[i][j]->n;
    }
    out << '\n';
  }

  out << '\n';
  header("p_two_tailed");
  for (std::size_t i = 0; i < k; ++i) {
    out << csv_field(rep.variables[i]);
    for (std::size_t j = 0; j < k; ++j) {
      out << ',';
      if (i == j) continue;
      const auto& cell = i < j ? rep.spearman_rho[i][j] : rep.pearson_r[i][j];
      if (cell) out << format_sig(cell->p, 6);
    }
    out << '\n';
  }
  return out.str();
}

std::string range_histogram_csv(const DataTable& t,
                                const std::vector<std::string>& fields,
                                std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("need at least one bin");
  std::vector<std::size_t> cols;
  for (const auto& f : fields) {
    int c = t.column_index(f);
    if (c < 0) throw std::invalid_argument("unknown field: " + f);
    cols.push_back(static_cast<std::size_t>(c));
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t c : cols)
    for (const auto& v : t.values[c])
      if (v && *v > 0.0) {
        lo = std::min(lo, *v);
        hi = std::max(hi, *v);
      }

  std::ostringstream out;
  out << "bin_low,bin_high";
  for (const auto& f : fields) out << ',' << csv_field(f);
  out << '\n';

  // zeros cannot live on a log scale; report them separately
  out << "0,0";
  for (std::size_t c : cols) {
    std::size_t zeros = 0;
    for (const auto& v : t.values[c])
      if (v && *v == 0.0) ++zeros;
    out << ',' << zeros;
  }
  out << '\n';

  if (!std::isfinite(lo)) return out.str();  // no positive values at all
  if (lo == hi) hi = lo * 2.0;               // degenerate single value

  const double log_lo = std::log(lo), log_hi = std::log(hi);
  std::vector<double> edges(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b)
    edges[b] = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(b) /
                                     static_cast<double>(bins));
  edges.front() = lo;
  edges.back() = hi;

  for (std::size_t b = 0; b < bins; ++b) {
    out << format_sig(edges[b], 6) << ',' << format_sig(edges[b + 1], 6);
    for (std::size_t c : cols) {
      std::size_t count = 0;
      for (const auto& v : t.values[c]) {
        if (!v || *v <= 0.0) continue;
        bool in = b + 1 == bins ? (*v >= edges[b] && *v <= edges[b + 1])
                                : (*v >= edges[b] && *v < edges[b + 1]);
        if (in) ++count;
      }
      out << ',' << count;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace divnet
