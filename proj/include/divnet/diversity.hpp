#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "divnet/matrix.hpp"
#include "divnet/similarity.hpp"

namespace divnet {

// Exponents of the generalized Stirling measure
// sum_{i != j} d_ij^alpha * (p_i p_j)^beta; the reference case is 1/1.
struct RSParams {
  double alpha = 1.0;
  double beta = 1.0;
};

// Which values the balance (Gini) factor is computed over. NonzeroOnly is
// the default: the variety factor already accounts for absent classes, and
// counting their zeros again would drive Gini towards 1 for sparse columns.
enum class GiniSupport { nonzero_only, include_zeros };

// Gini coefficient over nonnegative values via the rank form
//   G = sum_i (2i - n - 1) x_(i) / (n * sum_i x_i),   x ascending, i = 1..n.
// 0 for a single value or an all-equal vector (exactly). Throws
// std::invalid_argument on an empty, all-zero, or negative input.
double gini(std::span<const double> values);

// The classical double-loop definition
//   G = sum_ij |x_i - x_j| / (2 n^2 mean).
// Kept as an independent route; must agree with gini() to 1e-12.
double gini_bruteforce(std::span<const double> values);

// Natural-log entropy -sum p ln p. Requires p_i > 0 and sum p = 1
// (tolerance 1e-9).
double shannon(std::span<const double> proportions);

// 1 - sum p_i^2, same preconditions as shannon.
double gini_simpson(std::span<const double> proportions);

struct Variety {
  std::int64_t absolute = 0;  // n_c
  double relative = 0.0;      // n_c / N
};

// Throws if n_available < n_c or n_available <= 0.
Variety variety(const ColumnProfile& profile, std::int64_t n_available);

// Mean distance over ordered pairs of distinct classes present in the
// profile: sum d_ij / [n_c (n_c - 1)]; 0 when n_c <= 1.
double avg_disparity(const ColumnProfile& profile, const DisparityMatrix& d);

// Rao-Stirling diversity sum_{i != j} d_ij^alpha (p_i p_j)^beta over the
// profile's proportions. Runs over the lower triangle and doubles, which
// is term-for-term identical to the ordered-pair sum.
double rao_stirling(const ColumnProfile& profile, const DisparityMatrix& d,
                    const RSParams& params = {});

// 1 / (1 - rs); empty when rs >= 1.
std::optional<double> true_diversity(double rs);

// The three-factor diversity (n_c/N) * (1 - Gini) * mean disparity.
double div_indicator(const ColumnProfile& profile, const DisparityMatrix& d,
                     std::int64_t n_available,
                     GiniSupport support = GiniSupport::nonzero_only);

// Coherence sum_{i != j} p_ij d_ij where p_ij normalizes the off-diagonal
// co-occurrence mass to one; 0 when there is no off-diagonal mass.
// Throws on a label mismatch between the two matrices.
double coherence(const CoocMatrix& cooc, const DisparityMatrix& d);

// One output record per unit: every indicator the pipeline reports.
struct IndicatorRow {
  std::string unit_label;
  double rs = 0.0;
  std::optional<double> true_diversity;  // empty when rs >= 1
  double div = 0.0;
  double gini = 0.0;
  double gini_simpson = 0.0;
  double shannon = 0.0;
  double disparity = 0.0;
  double variety_rel = 0.0;
  std::int64_t variety_abs = 0;
  std::int64_t n_classes_available = 0;
};

// Assembles all indicators for one column. An all-zero column yields a row
// of zeros with true_diversity = 1.
IndicatorRow indicator_row(const ColumnProfile& profile,
                           const DisparityMatrix& d, std::int64_t n_available,
                           const RSParams& params = {},
                           GiniSupport support = GiniSupport::nonzero_only);

}  // namespace divnet
