#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nldim/graph.hpp"

namespace nldim {

// Deterministic graph families. All generators throw std::invalid_argument
// on parameters outside their documented range.

Graph empty_graph(int n);
Graph path(int n);
Graph cycle(int n);                          // n >= 3
Graph complete(int n);                       // n >= 1
Graph complete_bipartite(int s, int t);      // parts 0..s-1 and s..s+t-1
Graph star(int leaves);                      // K_{1,leaves}, center 0
Graph wheel(int n);                          // rim 0..n-1, hub n; n >= 3
Graph spider(const std::vector<int>& legs);  // center 0, legs appended in order
Graph petersen();                            // outer 0..4, inner 5..9

/// Uniform random labeled tree (Prufer decoding).
Graph random_tree(int n, std::uint64_t seed);

/// Blocks glued along a random tree skeleton. Block j is a clique on one
/// existing vertex plus block_sizes[j]-1 new ones (the first block is all new).
Graph random_block_graph(const std::vector<int>& block_sizes, std::uint64_t seed);

/// Random spanning tree plus every other pair independently with probability p.
Graph random_connected(int n, double p, std::uint64_t seed);

/// Connected bipartite graph: random spanning tree across a random
/// bipartition plus cross edges with probability p.
Graph random_bipartite_connected(int n, double p, std::uint64_t seed);

/// Derives an independent per-instance seed from a campaign seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// A named family plus integer parameters, e.g. {"wheel", {13}}.
struct FamilySpec {
  std::string name;
  std::vector<long long> params;
  double probability = 0.3;
};

/// Names accepted by generate().
std::vector<std::string> family_names();

Graph generate(const FamilySpec& spec);

}  // namespace nldim
