#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "divnet/pajek.hpp"

namespace divnet {

struct GraphLink {
  std::size_t source = 0;  // 0-based
  std::size_t target = 0;
  double weight = 1.0;
};

// 1-mode weighted network. Links are stored exactly once per (source,
// target) pair (duplicates are merged by summing weights); loops are kept
// and flagged where algorithms must ignore them.
class Graph {
public:
  Graph(std::vector<std::string> labels, bool directed,
        std::vector<GraphLink> links);

  // A 1-mode Pajek network. The graph is directed iff the file contains
  // any arc (or *Matrix) link; edges then count in both directions.
  static Graph from_network(const PajekNetwork& net);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t link_count() const { return links_.size(); }
  std::size_t loop_count() const { return loops_; }
  double total_weight() const;
  bool directed() const { return directed_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<GraphLink>& links() const { return links_; }

  // Binary adjacency with loops dropped and duplicates merged.
  std::vector<std::vector<std::size_t>> adjacency(bool as_undirected) const;

private:
  std::vector<std::string> labels_;
  bool directed_ = false;
  std::vector<GraphLink> links_;
  std::size_t loops_ = 0;
};

enum class BCMode { undirected_binary, directed_binary };

// Exact Brandes shortest-path betweenness over binary adjacency, loops
// ignored. Undirected mode reports each unordered pair once. Dependencies
// accumulate in extended precision so results match an exact rational
// path-count oracle after the final rounding. Deterministic for any
// thread count (fixed-size source blocks, reduced in order).
std::vector<double> betweenness(const Graph& g,
                                BCMode mode = BCMode::undirected_binary,
                                unsigned threads = 1);

// raw * 2 / ((n-1)(n-2)) undirected, raw / ((n-1)(n-2)) directed.
// Throws when n < 3.
std::vector<double> normalize_betweenness(const std::vector<double>& raw,
                                          std::size_t n, BCMode mode);

// Induced subgraph on the largest weakly-connected node set; ties go to
// the component containing the smallest node index. Throws on an empty
// graph.
Graph largest_component(const Graph& g);

struct Descriptives {
  std::size_t nodes = 0;
  std::size_t links = 0;
  std::size_t loops = 0;
  double total_weight = 0.0;
  double density = 0.0;       // links/(n(n-1)), doubled when undirected
  double mean_degree = 0.0;   // mean total degree 2*links/n
  double clustering = 0.0;    // mean local coefficient, undirected binary
  double avg_distance = 0.0;  // over the largest component, BFS hops
  std::size_t max_distance = 0;
  std::size_t component_nodes = 0;
};

Descriptives descriptives(const Graph& g);

}  // namespace divnet
