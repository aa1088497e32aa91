#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divnet/matrix.hpp"

namespace divnet {

enum class LinkKind { arc, edge };

struct PajekLink {
  int source = 0;  // 1-based vertex ids, as in the file
  int target = 0;
  double weight = 1.0;
  LinkKind kind = LinkKind::arc;
};

// In-memory model of a Pajek .net file. For a 2-mode network,
// mode_split = r means vertices 1..r are row vertices and r+1..n are
// column vertices; every link must then run from a row to a column.
struct PajekNetwork {
  std::vector<std::string> labels;  // labels[i] belongs to vertex id i+1
  std::optional<int> mode_split;
  std::vector<PajekLink> links;

  int vertex_count() const { return static_cast<int>(labels.size()); }
  bool is_two_mode() const { return mode_split.has_value(); }
};

// Order-insensitive comparison (links as multisets).
bool operator==(const PajekNetwork& a, const PajekNetwork& b);

// Parses the `*Vertices n [r]` / `*Arcs` / `*Edges` / `*Matrix` subset of
// the format. Section keywords are case-insensitive; blank lines and
// %-comments are skipped; labels may be quoted or bare; a missing weight
// defaults to 1. Vertices not listed get their id as label. Throws
// std::runtime_error with a line number on malformed input, unknown or
// duplicate vertex ids, negative weights, and bipartite violations.
PajekNetwork parse_net(std::string_view text);

// Canonical form: quoted labels, `*Arcs` then `*Edges` sections, weights
// at full precision. write(parse(write(n))) == write(n) byte for byte.
std::string write_net(const PajekNetwork& net);

PajekNetwork read_net_file(const std::string& path);
void write_net_file(const PajekNetwork& net, const std::string& path);

// A 2-mode network maps straight onto rows x columns. A 1-mode network
// becomes the square adjacency matrix over its vertices: arcs fill
// cell(source, target), edges fill both directions (a loop edge lands on
// its diagonal cell twice).
TwoModeMatrix to_two_mode(const PajekNetwork& net);

// Inverse of to_two_mode's 2-mode reading: rows become vertices 1..R,
// columns become vertices R+1..R+U, cells become arcs.
PajekNetwork from_two_mode(const TwoModeMatrix& m);

}  // namespace divnet
