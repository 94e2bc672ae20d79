#include <doctest.h>

#include <random>

#include "nldim/formats.hpp"
#include "nldim/generators.hpp"

using namespace nldim;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

}  // namespace

TEST_CASE("graph6 known strings") {
  CHECK(emit_graph6(Graph()) == "?");
  CHECK(emit_graph6(complete(1)) == "@");
  CHECK(emit_graph6(complete(2)) == "A_");
  CHECK(emit_graph6(path(3)) == "Bg");  // bits 1,0,1 for pairs (0,1),(0,2),(1,2)
  CHECK(emit_graph6(complete(4)) == "C~");
  CHECK(emit_graph6(petersen()).size() == 9);
  CHECK(parse_graph6("D?{") == Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  CHECK(emit_graph6(parse_graph6("D?{")) == "D?{");
  CHECK(parse_graph6(">>graph6<<Bg\n") == path(3));
}

TEST_CASE("graph6 long header") {
  const Graph g = cycle(100);
  const auto s = emit_graph6(g);
  CHECK(s.substr(0, 4) == "~?@c");
  CHECK(parse_graph6(s) == g);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("C"), FormatError);
  CHECK_THROWS_AS(parse_graph6("C~~"), FormatError);
  CHECK_THROWS_AS(parse_graph6("C "), FormatError);
  CHECK_THROWS_AS(parse_graph6("Bx"), FormatError);  // padding bit set
  CHECK_THROWS_AS(parse_graph6("~"), FormatError);
}

TEST_CASE("edgelist") {
  CHECK(parse_edgelist("0 1\n1 2") == path(3));
  CHECK(parse_edgelist("# a comment\n\n0 1\n1 0\n1 2 # trailing\n") == path(3));
  CHECK(parse_edgelist("# vertices 5\n0 1\n").order() == 5);
  CHECK(parse_edgelist("") == Graph());
  CHECK_THROWS_AS(parse_edgelist("0 0\n"), FormatError);
  CHECK_THROWS_AS(parse_edgelist("0\n"), FormatError);
  CHECK_THROWS_AS(parse_edgelist("0 x\n"), FormatError);
  CHECK_THROWS_AS(parse_edgelist("0 -1\n"), FormatError);
  CHECK_THROWS_AS(parse_edgelist("# vertices 2\n0 5\n"), FormatError);
  CHECK(emit_edgelist(path(3)) == "# vertices 3\n0 1\n1 2\n");
}

TEST_CASE("round trip on random graphs") {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const int n = static_cast<int>(seed % 80);
    const Graph g = random_graph(n, 0.05 + static_cast<double>(seed % 10) / 12.0, seed);
    const auto g6 = emit_graph6(g);
    CHECK(parse_graph6(g6) == g);
    CHECK(emit_graph6(parse_graph6(g6)) == g6);
    CHECK(parse_edgelist(emit_edgelist(g)) == g);
  }
  CHECK(parse_graph6(emit_graph6(cycle(5))) == cycle(5));
}

TEST_CASE("format names") {
  CHECK(parse_format("g6") == GraphFormat::Graph6);
  CHECK(parse_format("edgelist") == GraphFormat::EdgeList);
  CHECK_THROWS_AS(parse_format("dot"), FormatError);
  CHECK(parse_graph("0 1\n", GraphFormat::EdgeList) == path(2));
}
