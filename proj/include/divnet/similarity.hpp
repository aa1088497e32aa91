#pragma once

#include <string>
#include <vector>

#include "divnet/matrix.hpp"
#include "divnet/pajek.hpp"
#include "divnet/symmatrix.hpp"

namespace divnet {

// Class x class co-occurrence counts (M * M^T over row vectors).
struct CoocMatrix {
  std::vector<std::string> labels;
  SymMatrix cells;

  std::size_t class_count() const { return labels.size(); }
};

// Class x class distances d(i,j) in [0,1], zero diagonal. The constructor
// rejects anything outside those bounds, so every instance satisfies the
// invariants.
class DisparityMatrix {
public:
  DisparityMatrix(std::vector<std::string> labels, SymMatrix d);

  std::size_t class_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  double operator()(std::size_t i, std::size_t j) const { return d_(i, j); }

private:
  std::vector<std::string> labels_;
  SymMatrix d_;
};

// C = M * M^T: cooc(i,j) = sum_k m(i,k) * m(j,k). Bit-identical to the
// dense triple loop (same accumulation order per cell), and invariant to
// the thread count.
CoocMatrix row_projection(const TwoModeMatrix& m, unsigned threads = 1);

// s(i,j) = cooc(i,j) / sqrt(cooc(i,i) * cooc(j,j)) when both diagonal
// entries are positive, else 0; s(i,i) = 1 when cooc(i,i) > 0, else 0.
// Zero-norm classes thus sit at distance 1 from every other class.
SymMatrix cosine_similarity(const CoocMatrix& c, unsigned threads = 1);

// Binary-support Jaccard between row supports: |A n B| / |A u B|,
// 0 when both supports are empty.
SymMatrix jaccard_similarity(const TwoModeMatrix& m, unsigned threads = 1);

// d = 1 - s off-diagonal, diagonal forced to 0. Throws if s leaves [0,1].
DisparityMatrix disparity_from_similarity(const SymMatrix& s,
                                          std::vector<std::string> labels);

// Reads a co-occurrence matrix saved as a 1-mode .net (either *Matrix or
// *Edges/*Arcs form). Directed entries must agree symmetrically.
CoocMatrix cooc_from_network(const PajekNetwork& net);

// Writes the lower triangle (including nonzero diagonal) as *Edges.
PajekNetwork cooc_to_network(const CoocMatrix& c);

}  // namespace divnet
