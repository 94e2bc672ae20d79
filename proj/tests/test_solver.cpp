#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "nldim/enumerate.hpp"
#include "nldim/generators.hpp"
#include "nldim/solver.hpp"
#include "oracles.hpp"

using namespace nldim;

namespace {

constexpr PairMode kModes[] = {PairMode::All, PairMode::NonAdjacent, PairMode::Adjacent};

bool same_instance(const ResolutionInstance& a, const ResolutionInstance& b) {
  return a.order == b.order && a.mode == b.mode && a.pairs == b.pairs && a.distinguishers == b.distinguishers &&
         a.coverers == b.coverers;
}

}  // namespace

TEST_CASE("pair mode names") {
  for (auto m : kModes) CHECK(parse_pair_mode(to_string(m)) == m);
  CHECK(parse_pair_mode("nonlocal") == PairMode::NonAdjacent);
  CHECK_THROWS_AS(parse_pair_mode("sideways"), std::invalid_argument);
}

TEST_CASE("instance construction") {
  CHECK(build_instance(complete(6), PairMode::NonAdjacent).pair_count() == 0);
  const auto c4 = build_instance(cycle(4), PairMode::NonAdjacent);
  CHECK(c4.pairs == std::vector<Edge>{{0, 2}, {1, 3}});
  const auto p3 = build_instance(path(3), PairMode::All);
  CHECK(p3.pair_count() == 3);
  CHECK(p3.distinguishers[0].count() == 3);
  CHECK_THROWS_AS(build_instance(Graph(4, {{0, 1}, {2, 3}}), PairMode::All), DisconnectedGraph);
  CHECK_THROWS_AS(build_instance(path(300), PairMode::All), std::length_error);
}

TEST_CASE("parallel instance kernel equals the serial reference") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_connected(5 + static_cast<int>(seed * 7 % 90), 0.08, seed);
    for (auto m : kModes) CHECK(same_instance(build_instance(g, m), reference::build_instance(g, m)));
  }
}

TEST_CASE("instance bitsets are mutually transposed") {
  const Graph g = random_connected(20, 0.2, 4);
  const auto inst = build_instance(g, PairMode::All);
  for (std::size_t p = 0; p < inst.pair_count(); ++p)
    for (int v = 0; v < g.order(); ++v)
      CHECK(inst.coverers[p].test(static_cast<std::size_t>(v)) == inst.distinguishers[static_cast<std::size_t>(v)].test(p));
}

TEST_CASE("is_resolving examples") {
  CHECK(is_resolving(wheel(10), VertexList{0, 5, 7, 9}, PairMode::NonAdjacent));
  CHECK_FALSE(is_resolving(cycle(4), VertexList{0}, PairMode::NonAdjacent));
  CHECK(first_unresolved_pair(cycle(4), VertexList{0}, PairMode::NonAdjacent) == Edge{1, 3});
  const Graph g = random_connected(12, 0.3, 2);
  VertexList all(12);
  for (int i = 0; i < 12; ++i) all[static_cast<std::size_t>(i)] = i;
  for (auto m : kModes) CHECK(is_resolving(g, all, m));
}

TEST_CASE("exact values of named graphs") {
  CHECK(solve_exact(complete(7), PairMode::NonAdjacent).value == 0);
  CHECK(solve_exact(path(9), PairMode::NonAdjacent).value == 1);
  CHECK(solve_exact(cycle(9), PairMode::NonAdjacent).value == 2);
  CHECK(solve_exact(complete_bipartite(2, 3), PairMode::NonAdjacent).value == 3);
  CHECK(solve_exact(wheel(13), PairMode::NonAdjacent).value == 5);
  CHECK(solve_exact(petersen(), PairMode::NonAdjacent).value ==
        oracle::metric_dimension(petersen(), PairMode::NonAdjacent));
  CHECK(solve_exact(petersen(), PairMode::All).value == 3);
}

TEST_CASE("solver agrees with brute force and returns minimal certificates") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Graph g = random_connected(2 + static_cast<int>(seed % 11), 0.1 + 0.01 * static_cast<double>(seed % 50), seed);
    for (auto m : kModes) {
      const auto r = solve_exact(g, m);
      CHECK(r.value == oracle::metric_dimension(g, m));
      CHECK(static_cast<int>(r.basis.size()) == r.value);
      CHECK(std::is_sorted(r.basis.begin(), r.basis.end()));
      CHECK(oracle::resolves(oracle::distances(g), r.basis, m));
    }
  }
}

TEST_CASE("nonlocal value never exceeds the classic value") {
  for (int n = 1; n <= 5; ++n)
    for (auto mask : connected_masks(n)) {
      const Graph g = graph_from_mask(n, mask);
      CHECK(solve_exact(g, PairMode::NonAdjacent).value <= solve_exact(g, PairMode::All).value);
    }
}

TEST_CASE("greedy upper bound") {
  CHECK(greedy_upper_bound(complete(5), PairMode::NonAdjacent).empty());
  const auto p = greedy_upper_bound(path(7), PairMode::NonAdjacent);
  CHECK(!p.empty());
  CHECK(is_resolving(path(7), p, PairMode::NonAdjacent));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph t = random_tree(12, seed);
    for (auto m : kModes) {
      const auto x = greedy_upper_bound(t, m);
      CHECK(is_resolving(t, x, m));
      CHECK(static_cast<int>(x.size()) >= solve_exact(t, m).value);
      // inclusion-minimal
      for (std::size_t i = 0; i < x.size(); ++i) {
        auto y = x;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK_FALSE(is_resolving(t, y, m));
      }
    }
  }
}

TEST_CASE("all minimum bases") {
  const auto k = all_min_bases(complete(5), PairMode::NonAdjacent, 10);
  CHECK(k.value == 0);
  REQUIRE(k.bases.size() == 1);
  CHECK(k.bases[0].empty());

  const auto c4 = all_min_bases(cycle(4), PairMode::NonAdjacent, 10);
  CHECK(c4.bases == std::vector<VertexList>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  const auto w9 = all_min_bases(wheel(9), PairMode::NonAdjacent, 1000);
  CHECK_FALSE(w9.truncated);
  for (const auto& b : w9.bases) CHECK(std::find(b.begin(), b.end(), 9) == b.end());

  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph g = random_connected(3 + static_cast<int>(seed % 7), 0.3, seed);
    for (auto m : kModes) CHECK(all_min_bases(g, m, 100000).bases == oracle::all_bases(g, m));
  }

  const auto limited = all_min_bases(cycle(8), PairMode::All, 3);
  CHECK(limited.bases.size() == 3);
  CHECK(limited.truncated);
}

TEST_CASE("node budget") {
  SolverOptions tight;
  tight.node_budget = 1;
  CHECK_THROWS_AS(solve_exact(wheel(30), PairMode::NonAdjacent, tight), BudgetExceeded);

  setenv("NLDIM_BUDGET", "12345", 1);
  CHECK(SolverOptions::from_environment().node_budget == 12345);
  unsetenv("NLDIM_BUDGET");
  CHECK(SolverOptions::from_environment().node_budget == SolverOptions{}.node_budget);
}

TEST_CASE("solver is deterministic") {
  const Graph g = random_connected(16, 0.2, 77);
  const auto a = solve_exact(g, PairMode::NonAdjacent);
  const auto b = solve_exact(g, PairMode::NonAdjacent);
  CHECK(a.basis == b.basis);
  CHECK(a.stats.nodes == b.stats.nodes);
}
