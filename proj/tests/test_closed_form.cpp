#include <doctest.h>

#include "nldim/closed_form.hpp"
#include "nldim/generators.hpp"
#include "nldim/structure.hpp"
#include "oracles.hpp"

using namespace nldim;

namespace {

Graph net_graph() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }
Graph h_tree() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

int nonlocal(const Graph& g) { return solve_exact(g, PairMode::NonAdjacent).value; }

}  // namespace

TEST_CASE("tree formula") {
  CHECK(dim_tree(path(10)) == 1);
  CHECK(dim_tree(spider({1, 2, 3, 1})) == 3);
  CHECK(dim_tree(h_tree()) == 2);
  CHECK(nonlocal(h_tree()) == 2);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph t = random_tree(3 + static_cast<int>(seed % 12), seed);
    CHECK(dim_tree(t) == oracle::metric_dimension(t, PairMode::All));
    CHECK(dim_tree(t) == nonlocal(t));
  }
  CHECK_THROWS_AS(dim_tree(cycle(5)), std::invalid_argument);
}

TEST_CASE("block graphs") {
  const auto net = dimnl_block_graph(net_graph());
  CHECK(net.value == 2);
  CHECK(nonlocal(net_graph()) == 2);
  REQUIRE(net.witness);
  CHECK(is_resolving(net_graph(), *net.witness, PairMode::NonAdjacent));

  // Two K_4 sharing vertex 0.
  const Graph bowtie = random_block_graph({4, 4}, 0);
  CHECK(block_decomposition(bowtie).cut_vertices.size() == 1);
  const auto b = dimnl_block_graph(bowtie);
  CHECK(b.value == 1);
  REQUIRE(b.witness);
  CHECK(b.witness->size() == 1);
  CHECK(is_resolving(bowtie, *b.witness, PairMode::NonAdjacent));

  const auto k5 = dimnl_block_graph(complete(5));
  CHECK(k5.value == 0);

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph t = random_tree(3 + static_cast<int>(seed % 10), seed);
    CHECK(dimnl_block_graph(t).value == dim_tree(t));
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_block_graph({2 + static_cast<int>(seed % 3), 3, 2 + static_cast<int>(seed % 4), 2}, seed);
    const auto f = dimnl_block_graph(g);
    CHECK(f.value == oracle::metric_dimension(g, PairMode::NonAdjacent));
    REQUIRE(f.witness);
    CHECK(static_cast<int>(f.witness->size()) == f.value);
    CHECK(is_resolving(g, *f.witness, PairMode::NonAdjacent));
  }
  CHECK_THROWS_AS(dimnl_block_graph(cycle(5)), std::invalid_argument);
}

TEST_CASE("corona formula") {
  const int factor = nonlocal(join(complete(1), path(3)));
  CHECK(dimnl_corona(path(3), path(3)) == 3 * factor);
  CHECK(nonlocal(corona(path(3), path(3))) == 3 * factor);
  CHECK(dimnl_corona(complete(1), cycle(4)) == 2);
  CHECK(dimnl_corona(cycle(4), star(2)) == 4 * nonlocal(join(star(2), complete(1))));
  CHECK(nonlocal(corona(cycle(4), star(2))) == dimnl_corona(cycle(4), star(2)));
  CHECK_THROWS_AS(dimnl_corona(path(3), complete(3)), std::invalid_argument);
}

TEST_CASE("corona with a complete factor") {
  CHECK(nonlocal(corona(complete_bipartite(3, 3), complete(2))) == 4);
  for (int m = 3; m <= 5; ++m) CHECK(nonlocal(corona(path(m), complete(2))) == 2);
  // P_2 corona K_1 is P_4, whose nonlocal dimension is 1.
  CHECK(nonlocal(corona(path(2), complete(1))) == 1);
  const auto [lo, hi] = corona_complete_bounds(complete_bipartite(3, 3), 2);
  CHECK(lo == 4);
  CHECK(hi == 6);
}

TEST_CASE("wheel formulas") {
  CHECK(dimnl_wheel(3) == 0);  // W_{1,3} is K_4
  CHECK(nonlocal(wheel(3)) == 0);
  for (int n = 4; n <= 6; ++n) CHECK(dimnl_wheel(n) == 2);
  CHECK(dimnl_wheel(10) == 4);
  CHECK(dim_wheel(7) == 3);
  CHECK(dimnl_wheel(7) == 2);
  for (int n = 3; n <= 16; ++n) {
    CHECK(dimnl_wheel(n) == oracle::metric_dimension(wheel(n), PairMode::NonAdjacent));
    CHECK(dim_wheel(n) == solve_exact(wheel(n), PairMode::All).value);
    CHECK(dimlocal_wheel(n) == solve_exact(wheel(n), PairMode::Adjacent).value);
  }
}

TEST_CASE("wheel basis construction") {
  CHECK(wheel_basis(10) == VertexList{0, 5, 7, 9});
  CHECK(wheel_basis(12) == VertexList{0, 5, 7, 10});
  CHECK(wheel_basis(13) == VertexList{0, 5, 7, 10, 12});
  for (int n = 7; n <= 40; ++n) {
    const auto b = wheel_basis(n);
    CHECK(static_cast<int>(b.size()) == 2 * n / 5);
    CHECK(is_resolving(wheel(n), b, PairMode::NonAdjacent));
  }
}

TEST_CASE("wheel gaps") {
  const auto ok = wheel_gap_check(10, {0, 5, 7, 9});
  CHECK(ok.at_most_four);
  CHECK(ok.one_large_gap);
  CHECK(ok.isolated_wide_gaps);
  CHECK(ok.resolving);

  const auto two_large = wheel_gap_check(12, {0, 1, 6, 7});
  CHECK(two_large.at_most_four);
  CHECK_FALSE(two_large.one_large_gap);
  CHECK_FALSE(two_large.conditions_hold());

  const auto other = wheel_gap_check(10, {0, 2, 5, 7});
  CHECK(other.conditions_hold());
  CHECK(other.resolving);

  const auto p = wheel_gaps(10, {0, 5, 7, 9});
  int total = 0;
  for (const auto& g : p.gaps) total += g.size;
  CHECK(total == 10 - 4);

  CHECK_THROWS_AS(wheel_gap_check(10, {0}), std::invalid_argument);
  CHECK_THROWS_AS(wheel_gap_check(10, {0, 10}), std::invalid_argument);
}

TEST_CASE("gap conditions agree with resolvability on wheels") {
  // Exhaustively over rim subsets: the conditions hold exactly for the
  // nonlocal resolving sets of size at least two.
  for (int n = 7; n <= 12; ++n) {
    const auto d = oracle::distances(wheel(n));
    for (int k = 2; k <= n; ++k)
      oracle::for_each_subset(n, k, [&](const VertexList& x) {
        CHECK(wheel_gap_check(n, x).conditions_hold() == oracle::resolves(d, x, PairMode::NonAdjacent));
        return true;
      });
  }
}

TEST_CASE("size-three gaps can be removed") {
  for (int n = 7; n <= 12; ++n)
    for (const auto& b : oracle::all_bases(wheel(n), PairMode::NonAdjacent)) {
      const auto r = remove_size_three_gap(n, b);
      CHECK(r.size() == b.size());
      const auto rep = wheel_gap_check(n, r);
      CHECK(rep.resolving);
      for (const auto& g : rep.profile.gaps) CHECK(g.size != 3);
      CHECK(n <= static_cast<int>(b.size()) + wheel_gap_capacity(static_cast<int>(b.size())));
    }
  CHECK(wheel_gap_capacity(2) == 5);
  CHECK(wheel_gap_capacity(3) == 6);
  CHECK(wheel_gap_capacity(4) == 8);
}

TEST_CASE("omega bound") {
  CHECK(omega_upper_bound(complete(6)) == 0);
  CHECK(omega_upper_bound(petersen()) == 8);
}

TEST_CASE("edge cover bound") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) CHECK(beta_prime_upper_bound(random_tree(9, seed)).value);
  const auto s = beta_prime_upper_bound(spider({2, 2, 1}));
  REQUIRE(s.value);
  CHECK(*s.value == 2);
  CHECK(nonlocal(spider({2, 2, 1})) == 2);
  CHECK_FALSE(beta_prime_upper_bound(petersen()).value);
  CHECK(beta_prime_upper_bound(cycle(7)).value == 3);
}

TEST_CASE("complete bipartite") {
  CHECK(dimnl_complete_bipartite(1, 2) == 1);
  CHECK(nonlocal(path(3)) == 1);
  CHECK(dimnl_complete_bipartite(2, 3) == 3);
  CHECK(dimnl_complete_bipartite(4, 4) == 6);
  CHECK(nonlocal(complete_bipartite(4, 4)) == 6);
}

TEST_CASE("subdivided stars") {
  CHECK(is_subdivided_star(star(3)));
  CHECK(is_subdivided_star(spider({2, 2, 1})));
  CHECK(is_subdivided_star(spider({2, 1, 1, 1})));
  CHECK_FALSE(is_subdivided_star(spider({2, 2, 2})));
  CHECK_FALSE(is_subdivided_star(spider({3, 1, 1})));
  CHECK_FALSE(is_subdivided_star(h_tree()));
  CHECK_FALSE(is_subdivided_star(path(4)));
  CHECK_FALSE(is_subdivided_star(cycle(5)));
}
