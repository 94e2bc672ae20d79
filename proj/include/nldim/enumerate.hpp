#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nldim/graph.hpp"

namespace nldim {

inline constexpr int kMaxEnumerationOrder = 8;

/// Number of unordered pairs on n vertices; the width of an edge mask.
constexpr int pair_slots(int n) { return n * (n - 1) / 2; }

/// Graph from a bit mask over pairs in (0,1), (0,2), (1,2), (0,3), ... order
/// (column by column, the graph6 order).
Graph graph_from_mask(int n, std::uint64_t mask);

/// Connectivity of a mask-encoded graph without building it.
bool mask_connected(int n, std::uint64_t mask);

/// Masks of every connected labeled graph on n vertices, ascending.
/// Throws std::invalid_argument unless 1 <= n <= kMaxEnumerationOrder.
std::vector<std::uint32_t> connected_masks(int n);

/// Streams every connected labeled graph on n vertices exactly once; with
/// `canonical`, only the first labeled member of each isomorphism class.
/// The visitor returns false to stop early.
void enumerate_connected(int n, bool canonical, const std::function<bool(const Graph&)>& visit);

/// Isomorphism-invariant code of a graph with n <= 11: the smallest mask over
/// relabelings that list vertices by non-increasing degree.
std::uint64_t canonical_code(const Graph& g);

}  // namespace nldim
