#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "divnet/pajek.hpp"

using namespace divnet;

namespace {

// Random valid network for round-trip properties.
PajekNetwork random_network(std::mt19937& rng) {
  std::uniform_int_distribution<int> nd(1, 8);
  std::uniform_real_distribution<double> wd(0.0, 5.0);
  PajekNetwork net;
  int n = nd(rng);
  for (int i = 0; i < n; ++i)
    net.labels.push_back("node " + std::to_string(i) + (rng() % 2 ? "'x" : ""));
  bool two_mode = n >= 2 && rng() % 2 == 0;
  int r = 0;
  if (two_mode) {
    r = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    net.mode_split = r;
  }
  int links = static_cast<int>(rng() % 10);
  for (int l = 0; l < links; ++l) {
    PajekLink link;
    if (two_mode) {
      link.source = 1 + static_cast<int>(rng() % static_cast<unsigned>(r));
      link.target = r + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - r));
    } else {
      link.source = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      link.target = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    }
    link.weight = rng() % 3 == 0 ? static_cast<double>(rng() % 7) : wd(rng);
    link.kind = rng() % 2 ? LinkKind::arc : LinkKind::edge;
    net.links.push_back(link);
  }
  return net;
}

double cell(const TwoModeMatrix& m, std::size_t r, std::size_t c) {
  for (const auto& e : m.column(c))
    if (e.row == r) return e.value;
  return 0.0;
}

}  // namespace

TEST_CASE("parse 1-mode arcs") {
  auto net = parse_net("*Vertices 2\n1 \"a\"\n2 \"b\"\n*Arcs\n1 2 3.0\n");
  CHECK(net.vertex_count() == 2);
  CHECK(net.labels == std::vector<std::string>{"a", "b"});
  CHECK(!net.is_two_mode());
  REQUIRE(net.links.size() == 1);
  CHECK(net.links[0].source == 1);
  CHECK(net.links[0].target == 2);
  CHECK(net.links[0].weight == 3.0);
  CHECK(net.links[0].kind == LinkKind::arc);
}

TEST_CASE("parse 2-mode edges") {
  auto net = parse_net("*Vertices 3 1\n1 \"r1\"\n2 \"c1\"\n3 \"c2\"\n*Edges\n1 2 1\n1 3 2\n");
  REQUIRE(net.is_two_mode());
  CHECK(*net.mode_split == 1);
  REQUIRE(net.links.size() == 2);
  CHECK(net.links[0].kind == LinkKind::edge);
  CHECK(net.links[1].weight == 2.0);
}

TEST_CASE("parser tolerances") {
  SUBCASE("comments, blanks, CRLF, case") {
    auto net = parse_net("% exported\n\n*VERTICES 2\r\n1 \"a\"\n% mid\n2 b\n*ARCS\r\n1 2\n");
    CHECK(net.labels == std::vector<std::string>{"a", "b"});
    REQUIRE(net.links.size() == 1);
    CHECK(net.links[0].weight == 1.0);  // default weight
  }
  SUBCASE("unquoted labels take one token") {
    auto net = parse_net("*Vertices 1\n1 alpha 0.1 0.2\n");
    CHECK(net.labels[0] == "alpha");
  }
  SUBCASE("quoted labels keep spaces, trailing fields ignored") {
    auto net = parse_net("*Vertices 1\n1 \"a b c\" 0.5 0.5\n");
    CHECK(net.labels[0] == "a b c");
  }
  SUBCASE("missing vertex lines default to id labels") {
    auto net = parse_net("*Vertices 3\n2 \"named\"\n");
    CHECK(net.labels == std::vector<std::string>{"1", "named", "3"});
  }
  SUBCASE("vertices-only file is fine") {
    auto net = parse_net("*Vertices 1\n1 \"a\"\n");
    CHECK(net.links.empty());
  }
}

TEST_CASE("matrix sections") {
  SUBCASE("1-mode matrix, loops on the diagonal") {
    auto net = parse_net("*Vertices 2\n1 \"a\"\n2 \"b\"\n*Matrix\n2 3\n0 0\n");
    REQUIRE(net.links.size() == 2);
    CHECK(net.links[0].source == 1);
    CHECK(net.links[0].target == 1);
    CHECK(net.links[0].weight == 2.0);
    CHECK(net.links[1].target == 2);
    CHECK(net.links[1].weight == 3.0);
  }
  SUBCASE("2-mode matrix has r rows") {
    auto net = parse_net("*Vertices 3 1\n1 \"r\"\n2 \"u1\"\n3 \"u2\"\n*Matrix\n1.5 0\n");
    REQUIRE(net.links.size() == 1);
    CHECK(net.links[0].source == 1);
    CHECK(net.links[0].target == 2);
    CHECK(net.links[0].weight == 1.5);
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto fails_with = [](const char* text, const char* needle) {
    try {
      parse_net(text);
      FAIL_CHECK("expected failure for: " << text);
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("line ") == 0);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  fails_with("*Network x\n", "*Vertices");
  fails_with("*Vertices zero\n", "vertex count");
  fails_with("*Vertices 2\n1 \"a\"\n1 \"again\"\n", "duplicate vertex id");
  fails_with("*Vertices 2\n3 \"x\"\n", "out of range");
  fails_with("*Vertices 2\n*Arcs\n1 5 1\n", "out of range");
  fails_with("*Vertices 2\n*Arcs\n1 2 -1\n", "negative");
  fails_with("*Vertices 3 1\n*Edges\n2 3 1\n", "2-mode split");
  fails_with("*Vertices 2 5\n", "0 < r < n");
  fails_with("*Vertices 2\n*Matrix\n1 0\n0 1\n1 0\n", "more than");
  fails_with("*Vertices 2\n*Matrix\n1 0 3\n", "more than");
  fails_with("*Vertices 1\n1 \"open\n", "unterminated");
  fails_with("*Vertices 1\n1 \"a\"\n*Partition\n", "unsupported section");
}

TEST_CASE("write_net canonical form") {
  PajekNetwork one;
  one.labels = {"a"};
  CHECK(write_net(one) == "*Vertices 1\n1 \"a\"\n");

  PajekNetwork net;
  net.labels = {"a", "b"};
  net.links.push_back({1, 2, 0.5, LinkKind::edge});
  net.links.push_back({2, 1, 3.0, LinkKind::arc});
  CHECK(write_net(net) ==
        "*Vertices 2\n1 \"a\"\n2 \"b\"\n*Arcs\n2 1 3\n*Edges\n1 2 0.5\n");
}

TEST_CASE("round-trip: parse(write(n)) == n, write is byte-stable") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 300; ++i) {
    PajekNetwork net = random_network(rng);
    std::string text = write_net(net);
    PajekNetwork back = parse_net(text);
    CHECK(back == net);
    CHECK(write_net(back) == text);
  }

  // the 2-mode doc example byte-stabilizes on the second pass
  std::string ex = "*Vertices 3 1\n1 \"r1\"\n2 \"c1\"\n3 \"c2\"\n*Edges\n1 2 1\n1 3 2\n";
  std::string once = write_net(parse_net(ex));
  CHECK(write_net(parse_net(once)) == once);
}

TEST_CASE("round-trip survives a fixture corpus") {
  const char* corpus[] = {
      "*Vertices 2\n1 \"a\"\n2 \"b\"\n*Arcs\n1 2 3.0\n",
      "*Vertices 3 1\n1 \"r1\"\n2 \"c1\"\n3 \"c2\"\n*Edges\n1 2 1\n1 3 2\n",
      "*Vertices 2\n1 \"a\"\n2 \"b\"\n*Matrix\n2 3\n1 0\n",
      "*Vertices 3 2\n1 r1\n2 r2\n3 u\n*Matrix\n1\n2\n",
      "*Vertices 2\n1 \"a\"\n2 \"b\"\n*Arcs\n1 1 2\n*Edges\n1 2 1\n",
      "% comment\n*Vertices 2\n1 plain\n2 \"quoted label\"\n*Edges\n1 2\n",
  };
  for (const char* text : corpus) {
    PajekNetwork net = parse_net(text);
    PajekNetwork back = parse_net(write_net(net));
    CHECK(back == net);
    CHECK(write_net(back) == write_net(net));
  }
}

TEST_CASE("to_two_mode") {
  SUBCASE("1-mode arc") {
    auto m = to_two_mode(parse_net("*Vertices 2\n1 \"a\"\n2 \"b\"\n*Arcs\n1 2 3\n"));
    CHECK(m.row_count() == 2);
    CHECK(m.col_count() == 2);
    CHECK(m.row_labels() == m.col_labels());
    CHECK(cell(m, 0, 1) == 3.0);
    CHECK(cell(m, 1, 0) == 0.0);
  }
  SUBCASE("self-loop kept on the diagonal") {
    auto m = to_two_mode(parse_net("*Vertices 1\n1 \"a\"\n*Arcs\n1 1 2\n"));
    CHECK(cell(m, 0, 0) == 2.0);
  }
  SUBCASE("edge expands symmetrically") {
    auto m = to_two_mode(parse_net("*Vertices 2\n1 \"a\"\n2 \"b\"\n*Edges\n1 2 1\n"));
    CHECK(cell(m, 0, 1) == 1.0);
    CHECK(cell(m, 1, 0) == 1.0);
  }
  SUBCASE("2-mode maps rows and columns directly") {
    auto m = to_two_mode(
        parse_net("*Vertices 3 1\n1 \"r1\"\n2 \"c1\"\n3 \"c2\"\n*Edges\n1 2 1\n1 3 2\n"));
    CHECK(m.row_count() == 1);
    CHECK(m.col_count() == 2);
    CHECK(m.row_labels()[0] == "r1");
    CHECK(cell(m, 0, 0) == 1.0);
    CHECK(cell(m, 0, 1) == 2.0);
  }
}

TEST_CASE("to_two_mode preserves total weight") {
  // sum of cells = sum of arc weights + 2 * sum of edge weights
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    PajekNetwork net = random_network(rng);
    double arcs = 0.0, edges = 0.0;
    for (const auto& l : net.links)
      (l.kind == LinkKind::arc ? arcs : edges) += l.weight;
    double expected = net.is_two_mode() ? arcs + edges : arcs + 2.0 * edges;
    CHECK(to_two_mode(net).total_weight() == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("from_two_mode inverts the 2-mode reading") {
  auto net = parse_net("*Vertices 5 2\n1 \"r1\"\n2 \"r2\"\n3 \"u1\"\n4 \"u2\"\n5 \"u3\"\n"
                       "*Arcs\n1 3 1\n2 4 2.5\n1 5 4\n");
  auto m = to_two_mode(net);
  CHECK(from_two_mode(m) == net);
}
