#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nldim/bitset.hpp"
#include "nldim/graph.hpp"

namespace nldim {

/// Which vertex pairs a landmark set has to tell apart.
enum class PairMode {
  All,          // classic resolving sets, dim(G)
  NonAdjacent,  // nonlocal resolving sets, dim_nl(G)
  Adjacent,     // local resolving sets, dim_l(G)
};

std::string_view to_string(PairMode mode);
/// Accepts "full"/"all", "nonlocal"/"nonadjacent", "local"/"adjacent".
PairMode parse_pair_mode(std::string_view text);

/// Hard cap on the number of pairs in one instance.
inline constexpr std::size_t kMaxPairs = 20000;

/// Set-cover view of a resolving-set problem: the pairs to separate and, for
/// every vertex, the pairs it separates.
struct ResolutionInstance {
  int order = 0;
  PairMode mode = PairMode::All;
  std::vector<Edge> pairs;               // u < v, lexicographic
  std::vector<Bitset> distinguishers;    // per vertex, over pair indices
  std::vector<Bitset> coverers;          // per pair, over vertices

  std::size_t pair_count() const { return pairs.size(); }
};

/// Builds the instance with an OpenMP-parallel kernel over vertices.
/// Throws DisconnectedGraph, or std::length_error above kMaxPairs.
ResolutionInstance build_instance(const Graph& g, PairMode mode);

namespace reference {
/// Serial pair-major construction, kept as the baseline for the parallel kernel.
ResolutionInstance build_instance(const Graph& g, PairMode mode);
}  // namespace reference

/// True iff every pair of the mode is separated by some landmark in X.
bool is_resolving(const Graph& g, std::span<const Vertex> landmarks, PairMode mode);

/// First pair of the mode left unresolved by X, if any.
std::optional<Edge> first_unresolved_pair(const Graph& g, std::span<const Vertex> landmarks, PairMode mode);

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("search budget of " + std::to_string(nodes) + " branch nodes exceeded"), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

struct SolverOptions {
  std::uint64_t node_budget = 100'000'000;

  /// Defaults, with node_budget overridden by NLDIM_BUDGET when set.
  static SolverOptions from_environment();
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

struct SolveResult {
  int value = 0;
  VertexList basis;  // ascending
  PairMode mode = PairMode::All;
  SolveStats stats;
};

/// Exact minimum via branch and bound. Throws BudgetExceeded.
SolveResult solve_exact(const Graph& g, PairMode mode, const SolverOptions& options = {});
SolveResult solve_exact(const ResolutionInstance& instance, const SolverOptions& options = {});

/// Greedy max-coverage set, pruned to an inclusion-minimal resolving set.
VertexList greedy_upper_bound(const Graph& g, PairMode mode);
VertexList greedy_upper_bound(const ResolutionInstance& instance);

struct BasisEnumeration {
  int value = 0;
  std::vector<VertexList> bases;  // ascending lexicographic, deduplicated
  bool truncated = false;         // more bases exist beyond the limit
  SolveStats stats;
};

/// Every minimum-size resolving set, up to `limit` of them.
BasisEnumeration all_min_bases(const Graph& g, PairMode mode, std::size_t limit, const SolverOptions& options = {});

}  // namespace nldim
