#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nldim/graph.hpp"
#include "nldim/solver.hpp"

namespace nldim {

/// A connected G placed as an induced subgraph of a supergraph H whose
/// anchor clique K_k is a nonlocal resolving set.
///
/// G keeps its labels 0..n-1 inside H; anchor vertex j is n + j. Classes are
/// the colour classes of an optimal colouring of the complement of G (so each
/// is a clique of G), relabeled so that an edge of G joins class 0 and class
/// s-1. Anchor j is joined to every vertex of class i iff bit j of i, written
/// with k bits and the most significant bit first, is 0.
struct EmbeddingResult {
  Graph host;
  VertexList embedding;              // embedding[v] = image of v in host
  std::vector<VertexList> classes;   // X_0 .. X_{s-1}
  VertexList anchor;                 // host vertices of K_k
  int s = 0;                         // chi(complement of G)
  int k = 0;                         // ceil(log2 s)
};

/// Throws DisconnectedGraph.
EmbeddingResult embed_supergraph(const Graph& g);

/// Bit j (0 = most significant of k bits) of class label i.
bool anchor_bit(int label, int j, int k);

struct EmbeddingReport {
  bool induced = false;
  bool anchor_resolving = false;
  int diameter = 0;
  bool diameter_at_most_4 = false;
  bool below_power_of_two = false;     // s < 2^k
  bool diameter_at_most_3 = false;     // required when below_power_of_two
  bool statement_range = false;        // 2^(k-1) <= s < 2^k, recorded only
  std::optional<int> solved_dimension; // exact dim_nl(H) when solved
  bool solved_within_bound = true;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks the construction. `solve_limit` caps n(H) for the exact solve
/// (0 disables it).
EmbeddingReport verify_embedding(const Graph& g, const EmbeddingResult& r, int solve_limit = 40,
                                 const SolverOptions& options = {});

}  // namespace nldim
