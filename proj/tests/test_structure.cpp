#include <doctest.h>

#include <random>

#include "nldim/generators.hpp"
#include "nldim/structure.hpp"
#include "oracles.hpp"

using namespace nldim;

namespace {

Graph net_graph() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

// Two adjacent branch vertices, each carrying two pendant legs of length 1.
Graph h_tree() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

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

TEST_CASE("clique number") {
  CHECK(clique_number(complete(5)) == 5);
  CHECK(clique_number(complete_bipartite(3, 4)) == 2);
  for (int s = 2; s <= 4; ++s)
    for (int t = 2; t <= 4; ++t) CHECK(clique_number(join(complete(s), empty_graph(t))) == s + 1);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = random_graph(1 + static_cast<int>(seed % 14), 0.5, seed);
    const auto c = maximum_clique(g);
    CHECK(clique_number(g) == oracle::clique_number(g));
    CHECK(static_cast<int>(c.size()) == clique_number(g));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(g.adjacent(c[i], c[j]));
  }
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(complement(petersen())).colors == 5);
  CHECK(chromatic_number(empty_graph(4)).colors == 1);
  CHECK(chromatic_number(cycle(7)).colors == 3);
  CHECK(chromatic_number(petersen()).colors == 3);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_graph(1 + static_cast<int>(seed % 9), 0.45, seed);
    const auto col = chromatic_number(g);
    CHECK(col.colors == oracle::chromatic_number(g));
    CHECK(is_proper_coloring(g, col.color_of));
    std::size_t total = 0;
    for (const auto& cls : col.classes) total += cls.size();
    CHECK(total == static_cast<std::size_t>(g.order()));
  }
  CHECK_FALSE(is_proper_coloring(path(2), {0, 0}));
}

TEST_CASE("matching and edge cover") {
  CHECK(edge_cover_number(path(4)) == 2);
  CHECK(edge_cover_number(spider({2, 2, 1})) == 3);
  CHECK(edge_cover_number(star(6)) == 6);
  CHECK(matching_size(maximum_matching(petersen())) == 5);
  CHECK_THROWS_AS(edge_cover_number(Graph(3, {{0, 1}})), std::invalid_argument);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = random_graph(2 + static_cast<int>(seed % 11), 0.35, seed);
    const auto mate = maximum_matching(g);
    CHECK(matching_size(mate) == oracle::matching_number(g));
    for (int v = 0; v < g.order(); ++v) {
      const int u = mate[static_cast<std::size_t>(v)];
      if (u >= 0) {
        CHECK(mate[static_cast<std::size_t>(u)] == v);
        CHECK(g.adjacent(u, v));
      }
    }
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_connected(2 + static_cast<int>(seed % 8), 0.3, seed);
    CHECK(edge_cover_number(g) == oracle::edge_cover_number(g));
  }
}

TEST_CASE("bipartition") {
  CHECK(bipartition(random_tree(12, 5)).has_value());
  CHECK_FALSE(bipartition(cycle(5)).has_value());
  const auto parts = bipartition(complete_bipartite(3, 4));
  REQUIRE(parts);
  CHECK(parts->first.size() == 3);
  CHECK(parts->second.size() == 4);
}

TEST_CASE("trees and paths") {
  CHECK(is_tree(spider({3, 1, 2})));
  CHECK_FALSE(is_tree(cycle(4)));
  CHECK(is_path_graph(path(6)));
  CHECK_FALSE(is_path_graph(star(3)));
}

TEST_CASE("blocks of a tree are its edges") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph t = random_tree(3 + static_cast<int>(seed % 10), seed);
    const auto d = block_decomposition(t);
    CHECK(d.blocks.size() == t.edge_count());
    for (const auto& b : d.blocks) CHECK(b.size() == 2);
    std::size_t internal = 0;
    for (int v = 0; v < t.order(); ++v) internal += t.degree(v) > 1;
    CHECK(d.cut_vertices.size() == internal);
    CHECK(block_cut_tree(t).tree.order() == static_cast<int>(t.edge_count() + internal));
  }
}

TEST_CASE("net graph block-cutpoint tree is a spider") {
  const auto bct = block_cut_tree(net_graph());
  CHECK(bct.decomposition.blocks.size() == 4);
  CHECK(bct.decomposition.cut_vertices == VertexList{0, 1, 2});
  CHECK(is_tree(bct.tree));
  CHECK(oracle::isomorphic(bct.tree, spider({2, 2, 2})));
  CHECK(is_block_graph(net_graph()));
}

TEST_CASE("block graph recognition") {
  CHECK_FALSE(is_block_graph(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})));
  CHECK(is_block_graph(complete(5)));
  CHECK_FALSE(is_block_graph(cycle(4)));
  const auto one = block_decomposition(complete(1));
  CHECK(one.blocks == std::vector<VertexList>{{0}});
}

TEST_CASE("block decomposition covers every edge exactly once") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_connected(4 + static_cast<int>(seed % 10), 0.15, seed);
    const auto d = block_decomposition(g);
    std::size_t edges = 0;
    for (const auto& b : d.blocks) {
      const Graph sub = g.induced(b);
      edges += sub.edge_count();
      // biconnected: removing any single vertex keeps it connected
      if (b.size() > 2)
        for (std::size_t i = 0; i < b.size(); ++i) {
          auto rest = b;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
          CHECK(is_connected(g.induced(rest)));
        }
    }
    CHECK(edges == g.edge_count());
    for (int v = 0; v < g.order(); ++v) {
      VertexList rest;
      for (int u = 0; u < g.order(); ++u)
        if (u != v) rest.push_back(u);
      const bool cut = !is_connected(g.induced(rest));
      CHECK(cut == std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), v));
    }
  }
}

TEST_CASE("tree statistics") {
  const auto s3 = tree_stats(spider({2, 3, 1}));
  CHECK(s3.leaf_count() == 3);
  CHECK(s3.exterior_count() == 1);
  CHECK(s3.terminal_paths(0) == 3);

  const auto h = tree_stats(h_tree());
  CHECK(h.leaf_count() == 4);
  CHECK(h.exterior_count() == 2);

  const auto st = tree_stats(star(5));
  CHECK(st.leaf_count() == 5);
  CHECK(st.exterior_count() == 1);

  // A branch vertex whose leaves are all strictly closer to another one is
  // not exterior.
  const Graph comb(10, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {2, 7}, {5, 8}, {5, 9}});
  const auto c = tree_stats(comb);
  CHECK(c.branch_vertices == VertexList{0, 1, 2, 5});
  CHECK(c.exterior_branch_vertices == VertexList{0, 2, 5});

  CHECK_THROWS_AS(tree_stats(path(5)), std::invalid_argument);
  CHECK_THROWS_AS(tree_stats(cycle(5)), std::invalid_argument);
}

TEST_CASE("distance levels") {
  const auto p = distance_levels(path(5), 0);
  CHECK(p.size() == 5);
  for (const auto& l : p) CHECK(l.size() == 1);
  const auto w = distance_levels(wheel(8), 8);
  REQUIRE(w.size() == 2);
  CHECK(w[1].size() == 8);
  const auto pet = distance_levels(petersen(), 0);
  REQUIRE(pet.size() == 3);
  CHECK(pet[0].size() == 1);
  CHECK(pet[1].size() == 3);
  CHECK(pet[2].size() == 6);
}
