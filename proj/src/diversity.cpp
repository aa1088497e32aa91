#include "divnet/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace divnet {

namespace {

void check_gini_input(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("gini of an empty vector");
  bool any_positive = false;
  for (double v : values) {
    if (v < 0.0) throw std::invalid_argument("gini requires nonnegative values");
    if (v > 0.0) any_positive = true;
  }
  if (!any_positive) throw std::invalid_argument("gini of an all-zero vector");
}

void check_distribution(std::span<const double> p) {
  if (p.empty()) throw std::invalid_argument("empty distribution");
  double sum = 0.0;
  for (double v : p) {
    if (!(v > 0.0)) throw std::invalid_argument("proportions must be positive");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("proportions must sum to 1");
}

void check_profile_classes(const ColumnProfile& profile,
                           const DisparityMatrix& d) {
  for (const auto& e : profile.entries)
    if (e.row >= d.class_count())
      throw std::invalid_argument("profile class index outside the disparity matrix");
}

double pow_or_id(double x, double e) { return e == 1.0 ? x : std::pow(x, e); }

}  // namespace

double gini(std::span<const double> values) {
  check_gini_input(values);
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  if (x.front() == x.back()) return 0.0;  // all equal, exactly even

  const double n = static_cast<double>(x.size());
  double weighted = 0.0, total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    weighted += (2.0 * static_cast<double>(i + 1) - n - 1.0) * x[i];
    total += x[i];
  }
  return weighted / (n * total);
}

double gini_bruteforce(std::span<const double> values) {
  check_gini_input(values);
  const std::size_t n = values.size();
  double total = 0.0;
  for (double v : values) total += v;
  const double mean = total / static_cast<double>(n);

  double abs_diffs = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      abs_diffs += std::abs(values[i] - values[j]);
  return abs_diffs / (2.0 * static_cast<double>(n) * static_cast<double>(n) * mean);
}

double shannon(std::span<const double> proportions) {
  check_distribution(proportions);
  double h = 0.0;
  for (double p : proportions) h -= p * std::log(p);
  return h < 0.0 ? 0.0 : h;  // -0 guard for the single-class case
}

double gini_simpson(std::span<const double> proportions) {
  check_distribution(proportions);
  double sq = 0.0;
  for (double p : proportions) sq += p * p;
  return 1.0 - sq;
}

Variety variety(const ColumnProfile& profile, std::int64_t n_available) {
  if (n_available <= 0)
    throw std::invalid_argument("number of available classes must be positive");
  auto n_c = static_cast<std::int64_t>(profile.class_count());
  if (n_c > n_available)
    throw std::invalid_argument("column uses more classes than available");
  return {n_c, static_cast<double>(n_c) / static_cast<double>(n_available)};
}

double avg_disparity(const ColumnProfile& profile, const DisparityMatrix& d) {
  check_profile_classes(profile, d);
  const std::size_t n_c = profile.class_count();
  if (n_c <= 1) return 0.0;
  double sum = 0.0;
  for (std::size_t a = 0; a < n_c; ++a)
    for (std::size_t b = 0; b < a; ++b)
      sum += d(profile.entries[a].row, profile.entries[b].row);
  return 2.0 * sum /
         (static_cast<double>(n_c) * static_cast<double>(n_c - 1));
}

double rao_stirling(const ColumnProfile& profile, const DisparityMatrix& d,
                    const RSParams& params) {
  check_profile_classes(profile, d);
  if (params.alpha < 0.0 || params.beta < 0.0)
    throw std::invalid_argument("RS exponents must be nonnegative");
  const std::size_t n_c = profile.class_count();
  if (n_c <= 1) return 0.0;

  std::vector<double> p = profile.proportions();
  double sum = 0.0;
  for (std::size_t a = 0; a < n_c; ++a)
    for (std::size_t b = 0; b < a; ++b) {
      double dist = d(profile.entries[a].row, profile.entries[b].row);
      double term =
          pow_or_id(dist, params.alpha) * pow_or_id(p[a] * p[b], params.beta);
      sum += 2.0 * term;  // both ordered pairs contribute the same value
    }
  return sum;
}

std::optional<double> true_diversity(double rs) {
  if (rs >= 1.0) return std::nullopt;
  return 1.0 / (1.0 - rs);
}

namespace {

double gini_for_support(const ColumnProfile& profile,
                        std::size_t class_universe, GiniSupport support) {
  if (support == GiniSupport::nonzero_only) return gini(profile.values());
  std::vector<double> padded(class_universe, 0.0);
  for (const auto& e : profile.entries) padded[e.row] = e.value;
  return gini(padded);
}

}  // namespace

double div_indicator(const ColumnProfile& profile, const DisparityMatrix& d,
                     std::int64_t n_available, GiniSupport support) {
  if (profile.class_count() == 0) return 0.0;
  Variety v = variety(profile, n_available);
  double balance = 1.0 - gini_for_support(profile, d.class_count(), support);
  return v.relative * balance * avg_disparity(profile, d);
}

double coherence(const CoocMatrix& cooc, const DisparityMatrix& d) {
  if (cooc.labels != d.labels())
    throw std::invalid_argument("co-occurrence and disparity labels differ");
  const std::size_t R = cooc.class_count();
  double off_diag = 0.0, weighted = 0.0;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      off_diag += 2.0 * cooc.cells(i, j);
      weighted += 2.0 * cooc.cells(i, j) * d(i, j);
    }
  return off_diag == 0.0 ? 0.0 : weighted / off_diag;
}

IndicatorRow indicator_row(const ColumnProfile& profile,
                           const DisparityMatrix& d, std::int64_t n_available,
                           const RSParams& params, GiniSupport support) {
  IndicatorRow row;
  row.unit_label = std::string(profile.unit_label);
  row.n_classes_available = n_available;

  Variety v = variety(profile, n_available);
  row.variety_abs = v.absolute;
  row.variety_rel = v.relative;

  if (profile.class_count() == 0) {
    row.true_diversity = 1.0;
    return row;
  }

  std::vector<double> p = profile.proportions();
  row.gini = gini_for_support(profile, d.class_count(), support);
  row.gini_simpson = gini_simpson(p);
  row.shannon = shannon(p);
  row.disparity = avg_disparity(profile, d);
  row.rs = rao_stirling(profile, d, params);
  row.true_diversity = true_diversity(row.rs);
  row.div = row.variety_rel * (1.0 - row.gini) * row.disparity;
  return row;
}

}  // namespace divnet
