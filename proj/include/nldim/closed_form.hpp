#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nldim/graph.hpp"
#include "nldim/solver.hpp"

namespace nldim {

/// A closed-form value with an optional constructed nonlocal resolving set.
struct FormulaResult {
  int value = 0;
  std::optional<VertexList> witness;
  std::string theorem;
};

/// dim(T) for a tree on at least three vertices: 1 for paths, otherwise
/// leaves minus exterior branch vertices. Equals dim_nl(T).
int dim_tree(const Graph& t);

/// dim_nl of a connected block graph as dim of its block-cutpoint tree, with
/// a witness built from non-cut vertices of terminal blocks.
FormulaResult dimnl_block_graph(const Graph& g);

/// n(g) * dim_nl(K_1 + h); the join factor comes from the exact solver.
/// Throws std::invalid_argument when h is complete.
int dimnl_corona(const Graph& g, const Graph& h, const SolverOptions& options = {});

/// (dim(g), n(g)): bounds on dim_nl(g corona K_n).
std::pair<int, int> corona_complete_bounds(const Graph& g, int n, const SolverOptions& options = {});

// Wheels W_{1,n}: rim 0..n-1, hub n. Orders 3..6 are tabulated.
int dimnl_wheel(int n);
int dim_wheel(int n);
int dimlocal_wheel(int n);

/// Rim landmark set of size floor(2n/5) built by residue of n mod 5; n >= 7.
VertexList wheel_basis(int n);

struct WheelGap {
  Vertex left;   // landmark before the gap
  Vertex right;  // landmark after the gap
  int size;
};

/// Gaps of a rim landmark set in cyclic order, starting after the smallest
/// landmark. Sizes sum to n - |X|.
struct WheelGapProfile {
  int n = 0;
  VertexList landmarks;
  std::vector<WheelGap> gaps;
};

WheelGapProfile wheel_gaps(int n, const VertexList& rim_landmarks);

struct WheelGapReport {
  WheelGapProfile profile;
  bool at_most_four = false;          // every gap has <= 4 vertices
  bool one_large_gap = false;         // at most one gap has >= 3 vertices
  bool isolated_wide_gaps = false;    // gaps of size >= 2 only border gaps of size <= 1
  bool resolving = false;             // checked on W_{1,n}, NonAdjacent

  bool conditions_hold() const { return at_most_four && one_large_gap && isolated_wide_gaps; }
};

/// Checks the three gap conditions and verifies the set directly on W_{1,n}.
/// Throws std::invalid_argument when |X| < 2 or a landmark is off the rim.
WheelGapReport wheel_gap_check(int n, const VertexList& rim_landmarks);

/// Rewrites a nonlocal basis of W_{1,n} that has a gap of exactly three
/// vertices into one of equal size without such a gap, by shifting the
/// landmark that closes the gap. Sets without a size-3 gap are returned as-is.
VertexList remove_size_three_gap(int n, const VertexList& rim_landmarks);

/// Largest number of rim vertices that fit into gaps of a landmark set of
/// size k obeying the gap conditions with no gap of size three.
int wheel_gap_capacity(int k);

/// n(G) - omega(G).
int omega_upper_bound(const Graph& g);

struct BetaPrimeBound {
  std::optional<int> value;  // beta'(G) - 1 when girth >= 7
  std::string reason;        // why the bound does not apply
};

BetaPrimeBound beta_prime_upper_bound(const Graph& g);

/// s + t - 2 for s >= 1, t >= 2.
int dimnl_complete_bipartite(int s, int t);

/// True for trees obtained from K_{1,m}, m >= 3, by subdividing all but at
/// least one of the edges at most once.
bool is_subdivided_star(const Graph& t);

}  // namespace nldim
