#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nldim/graph.hpp"

namespace nldim {

/// Exact clique number by branch and bound with greedy-coloring pruning.
int clique_number(const Graph& g);

/// One maximum clique, ascending.
VertexList maximum_clique(const Graph& g);

struct Coloring {
  int colors = 0;
  std::vector<int> color_of;            // per vertex, 0..colors-1
  std::vector<VertexList> classes;      // ascending within each class
};

/// Exact chromatic number with an optimal coloring certificate
/// (DSATUR-ordered branch and bound, deterministic).
Coloring chromatic_number(const Graph& g);

bool is_proper_coloring(const Graph& g, const std::vector<int>& color_of);

/// Maximum matching in a general graph (Edmonds' blossom algorithm).
/// mate[v] is the partner of v or -1.
std::vector<Vertex> maximum_matching(const Graph& g);
int matching_size(const std::vector<Vertex>& mate);

/// beta'(G) = n - mu(G). Throws std::invalid_argument on isolated vertices.
int edge_cover_number(const Graph& g);

/// Colour classes of a connected bipartite graph, or nullopt if an odd
/// cycle exists. The class containing vertex 0 comes first.
std::optional<std::pair<VertexList, VertexList>> bipartition(const Graph& g);

bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);

struct BlockDecomposition {
  std::vector<VertexList> blocks;   // each ascending; blocks ordered by smallest member, then size
  VertexList cut_vertices;          // ascending
};

/// Maximal biconnected subgraphs (bridges are K_2 blocks). Throws DisconnectedGraph.
BlockDecomposition block_decomposition(const Graph& g);

/// True iff every block induces a complete graph.
bool is_block_graph(const Graph& g);

struct BlockCutNode {
  enum class Kind { Block, Cut };
  Kind kind;
  int index;  // block index, or the cut vertex id
};

/// Tree whose nodes are the blocks (0..B-1) followed by the cut vertices
/// (ascending); block B is adjacent to cut vertex v iff v lies in B.
struct BlockCutTree {
  Graph tree;
  std::vector<BlockCutNode> nodes;
  BlockDecomposition decomposition;
};

BlockCutTree block_cut_tree(const Graph& g);

/// Leaf / branch-vertex statistics of a tree that is not a path.
struct TreeStats {
  VertexList leaves;
  VertexList branch_vertices;            // degree >= 3
  VertexList exterior_branch_vertices;   // branch vertices with a terminal leaf
  std::map<Vertex, VertexList> terminal_leaves;  // exterior branch vertex -> its terminal leaves

  int leaf_count() const { return static_cast<int>(leaves.size()); }
  int exterior_count() const { return static_cast<int>(exterior_branch_vertices.size()); }
  int terminal_paths(Vertex w) const;
};

/// Throws std::invalid_argument for non-trees and for paths.
TreeStats tree_stats(const Graph& t);

/// L_0(x), L_1(x), ...: vertices grouped by distance from x.
std::vector<VertexList> distance_levels(const Graph& g, Vertex x);

}  // namespace nldim
