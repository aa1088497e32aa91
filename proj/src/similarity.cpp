#include "divnet/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "divnet/parallel.hpp"

namespace divnet {

namespace {

// Per-row list of (column, value), ascending column, built from the CSC
// storage.
std::vector<std::vector<std::pair<std::size_t, double>>> row_adjacency(
    const TwoModeMatrix& m) {
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(m.row_count());
  for (std::size_t c = 0; c < m.col_count(); ++c)
    for (const auto& e : m.column(c)) rows[e.row].emplace_back(c, e.value);
  return rows;
}

}  // namespace

DisparityMatrix::DisparityMatrix(std::vector<std::string> labels, SymMatrix d)
    : labels_(std::move(labels)), d_(std::move(d)) {
  if (labels_.size() != d_.size())
    throw std::invalid_argument("disparity labels and matrix size differ");
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_(i, i) != 0.0)
      throw std::invalid_argument("disparity diagonal must be zero");
    for (std::size_t j = 0; j < i; ++j)
      if (!(d_(i, j) >= 0.0 && d_(i, j) <= 1.0))
        throw std::invalid_argument("disparity outside [0,1]");
  }
}

CoocMatrix row_projection(const TwoModeMatrix& m, unsigned threads) {
  const std::size_t R = m.row_count();
  auto rows = row_adjacency(m);
  CoocMatrix out{m.row_labels(), SymMatrix(R)};

  parallel_chunks(R, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> acc(R);
    for (std::size_t i = begin; i < end; ++i) {
      std::fill(acc.begin(), acc.begin() + i + 1, 0.0);
      // acc[j] accumulates in ascending k, matching the dense triple loop.
      for (const auto& [k, xv] : rows[i]) {
        for (const auto& e : m.column(k)) {
          if (e.row > i) break;  // column entries sorted; keep j <= i
          acc[e.row] += xv * e.value;
        }
      }
      for (std::size_t j = 0; j <= i; ++j) out.cells.at(i, j) = acc[j];
    }
  });
  return out;
}

SymMatrix cosine_similarity(const CoocMatrix& c, unsigned threads) {
  const std::size_t R = c.class_count();
  SymMatrix s(R);
  parallel_for(R, threads, [&](std::size_t i) {
    double dii = c.cells(i, i);
    s.at(i, i) = dii > 0.0 ? 1.0 : 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      double djj = c.cells(j, j);
      if (dii > 0.0 && djj > 0.0) {
        double v = c.cells(i, j) / std::sqrt(dii * djj);
        // rounding can push the ratio a hair past 1
        s.at(i, j) = std::clamp(v, 0.0, 1.0);
      }
    }
  });
  return s;
}

SymMatrix jaccard_similarity(const TwoModeMatrix& m, unsigned threads) {
  const std::size_t R = m.row_count();
  std::vector<std::vector<std::size_t>> support(R);
  for (std::size_t c = 0; c < m.col_count(); ++c)
    for (const auto& e : m.column(c)) support[e.row].push_back(c);
  for (auto& s : support) std::sort(s.begin(), s.end());

  SymMatrix out(R);
  parallel_for(R, threads, [&](std::size_t i) {
    out.at(i, i) = support[i].empty() ? 0.0 : 1.0;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = support[i];
      const auto& b = support[j];
      if (a.empty() && b.empty()) continue;
      std::size_t inter = 0, ai = 0, bi = 0;
      while (ai < a.size() && bi < b.size()) {
        if (a[ai] < b[bi])
          ++ai;
        else if (a[ai] > b[bi])
          ++bi;
        else
          ++inter, ++ai, ++bi;
      }
      std::size_t uni = a.size() + b.size() - inter;
      out.at(i, j) = static_cast<double>(inter) / static_cast<double>(uni);
    }
  });
  return out;
}

DisparityMatrix disparity_from_similarity(const SymMatrix& s,
                                          std::vector<std::string> labels) {
  const std::size_t R = s.size();
  SymMatrix d(R);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      double v = s(i, j);
      if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("similarity outside [0,1]");
      d.at(i, j) = 1.0 - v;
    }
  return DisparityMatrix(std::move(labels), std::move(d));
}

CoocMatrix cooc_from_network(const PajekNetwork& net) {
  if (net.is_two_mode())
    throw std::invalid_argument("co-occurrence file must be a 1-mode network");
  const std::size_t R = net.labels.size();

  // Directed sums keyed by ordered (source, target); edges fill both
  // directions (loops once). Symmetry is then checked pairwise.
  std::unordered_map<std::uint64_t, double> sums;
  auto key = [R](std::size_t i, std::size_t j) {
    return static_cast<std::uint64_t>(i) * R + j;
  };
  for (const auto& l : net.links) {
    auto s = static_cast<std::size_t>(l.source - 1);
    auto t = static_cast<std::size_t>(l.target - 1);
    if (s >= R || t >= R)
      throw std::invalid_argument("link references an unknown vertex");
    sums[key(s, t)] += l.weight;
    if (l.kind == LinkKind::edge && s != t) sums[key(t, s)] += l.weight;
  }

  CoocMatrix out{net.labels, SymMatrix(R)};
  for (const auto& [k, v] : sums) {
    std::size_t i = static_cast<std::size_t>(k / R);
    std::size_t j = static_cast<std::size_t>(k % R);
    if (i != j) {
      auto other = sums.find(key(j, i));
      double mirrored = other == sums.end() ? 0.0 : other->second;
      if (mirrored != v)
        throw std::invalid_argument(
            "asymmetric co-occurrence input between '" + net.labels[i] +
            "' and '" + net.labels[j] + "'");
      if (i < j) continue;  // stored from the (j,i) side
    }
    out.cells.at(i, j) = v;
  }
  return out;
}

PajekNetwork cooc_to_network(const CoocMatrix& c) {
  PajekNetwork net;
  net.labels = c.labels;
  for (std::size_t i = 0; i < c.class_count(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (c.cells(i, j) != 0.0)
        net.links.push_back({static_cast<int>(j) + 1, static_cast<int>(i) + 1,
                             c.cells(i, j), LinkKind::edge});
  return net;
}

}  // namespace divnet
