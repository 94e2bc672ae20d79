#include <doctest.h>

#include "nldim/generators.hpp"
#include "nldim/structure.hpp"
#include "oracles.hpp"

using namespace nldim;

TEST_CASE("fixed families") {
  const Graph w = wheel(4);
  CHECK(w.order() == 5);
  CHECK(w.degree(4) == 4);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(star(5).degree(0) == 5);
  CHECK(cycle(6).edge_count() == 6);
  CHECK(path(1).order() == 1);
  CHECK(complete(6).edge_count() == 15);

  const Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(diameter(p) == 2);

  const Graph s = spider({2, 2, 1});
  CHECK(s.order() == 6);
  CHECK(s.degree(0) == 3);
  CHECK(is_tree(s));
}

TEST_CASE("random generators are connected and reproducible") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 13);
    const Graph t = random_tree(n, seed);
    CHECK(is_tree(t));
    CHECK(t.edge_count() == static_cast<std::size_t>(n - 1));
    CHECK(t == random_tree(n, seed));

    const Graph g = random_connected(n, 0.3, seed);
    CHECK(is_connected(g));
    CHECK(g == random_connected(n, 0.3, seed));

    const Graph b = random_bipartite_connected(n, 0.3, seed);
    CHECK(is_connected(b));
    CHECK(bipartition(b).has_value());

    const Graph bg = random_block_graph({3, 2, 4, 2}, seed);
    CHECK(bg.order() == 3 + 1 + 3 + 1);
    CHECK(is_connected(bg));
    CHECK(is_block_graph(bg));
  }
  const Graph t10 = random_tree(10, 1);
  CHECK(is_connected(t10));
  CHECK(t10.edge_count() == 9);
}

TEST_CASE("seed derivation separates instances") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("generate by name") {
  CHECK(generate({"wheel", {13}}) == wheel(13));
  CHECK(generate({"spider", {2, 2, 1}}) == spider({2, 2, 1}));
  CHECK(generate({"complete_bipartite", {3, 4}}) == complete_bipartite(3, 4));
  CHECK(generate({"random_tree", {9, 5}}) == random_tree(9, 5));
  CHECK_THROWS_AS(generate({"nonsense", {}}), std::invalid_argument);
  CHECK_THROWS_AS(generate({"wheel", {}}), std::invalid_argument);
  for (const auto& name : family_names()) CHECK_FALSE(name.empty());
}
