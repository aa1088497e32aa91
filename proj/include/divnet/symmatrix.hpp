#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace divnet {

// Dense symmetric matrix stored as the packed lower triangle.
// Writing (i,j) and reading (j,i) touch the same cell, so symmetry
// holds by construction.
class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, double fill = 0.0)
      : n_(n), cells_(n * (n + 1) / 2, fill) {}

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const {
    return cells_[index(i, j)];
  }
  double& at(std::size_t i, std::size_t j) { return cells_[index(i, j)]; }

private:
  static std::size_t index(std::size_t i, std::size_t j) {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }

  std::size_t n_ = 0;
  std::vector<double> cells_;
};

}  // namespace divnet
