#include <doctest.h>

#include "nldim/embed.hpp"
#include "nldim/generators.hpp"
#include "nldim/structure.hpp"

using namespace nldim;

TEST_CASE("anchor bits are most significant first") {
  CHECK(anchor_bit(4, 0, 3));
  CHECK_FALSE(anchor_bit(4, 2, 3));
  CHECK(anchor_bit(1, 2, 3));
}

TEST_CASE("complete graphs embed into themselves") {
  const auto r = embed_supergraph(complete(5));
  CHECK(r.host == complete(5));
  CHECK(r.anchor.empty());
  CHECK(r.k == 0);
  const auto rep = verify_embedding(complete(5), r);
  CHECK(rep.passed());
  CHECK(rep.diameter == 1);
  CHECK(rep.solved_dimension == 0);
}

TEST_CASE("Petersen graph") {
  const Graph p = petersen();
  const auto r = embed_supergraph(p);
  CHECK(r.s == 5);
  CHECK(r.k == 3);
  CHECK(r.host.order() == 13);
  CHECK(r.anchor == VertexList{10, 11, 12});
  for (const auto& c : r.classes) CHECK(c.size() == 2);
  // anchors form a clique
  CHECK(r.host.adjacent(10, 11));
  CHECK(r.host.adjacent(11, 12));
  CHECK(r.host.adjacent(10, 12));
  const auto rep = verify_embedding(p, r);
  CHECK(rep.passed());
  CHECK(rep.induced);
  CHECK(rep.anchor_resolving);
  CHECK(rep.diameter <= 4);
  REQUIRE(rep.solved_dimension);
  CHECK(*rep.solved_dimension <= 3);
}

TEST_CASE("even cycle C_4") {
  const auto r = embed_supergraph(cycle(4));
  CHECK(r.s == 2);
  CHECK(r.k == 1);
  REQUIRE(r.anchor.size() == 1);
  const Vertex a = r.anchor[0];
  for (Vertex v : r.classes[0]) CHECK(r.host.adjacent(a, v));
  for (Vertex v : r.classes[1]) CHECK_FALSE(r.host.adjacent(a, v));
  CHECK(verify_embedding(cycle(4), r).passed());
}

TEST_CASE("C_6 stays within diameter three") {
  const auto r = embed_supergraph(cycle(6));
  CHECK(r.s == 3);
  CHECK(r.k == 2);
  const auto rep = verify_embedding(cycle(6), r);
  CHECK(rep.below_power_of_two);
  CHECK(rep.diameter <= 3);
  CHECK(rep.passed());
}

TEST_CASE("random connected graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = random_connected(2 + static_cast<int>(seed % 11), 0.1 + 0.015 * static_cast<double>(seed), seed);
    const auto r = embed_supergraph(g);
    CHECK(r.s == chromatic_number(complement(g)).colors);
    const auto rep = verify_embedding(g, r);
    CHECK(rep.passed());
    for (const auto& v : rep.violations) MESSAGE(v);
  }
  CHECK_THROWS_AS(embed_supergraph(Graph(3, {{0, 1}})), DisconnectedGraph);
}
