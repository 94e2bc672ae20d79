#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nldim/bitset.hpp"

namespace nldim {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexList = std::vector<Vertex>;

/// Largest order accepted by the core graph operations.
inline constexpr int kMaxOrder = 512;

/// Raised by distance-dependent operations that need a connected graph.
class DisconnectedGraph : public std::invalid_argument {
 public:
  explicit DisconnectedGraph(const std::string& what)
      : std::invalid_argument(what + ": graph is not connected") {}
};

/// All-pairs hop distances. Pairs in different components hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr std::uint16_t kUnreachable = 0xFFFF;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

  int order() const { return n_; }
  std::uint16_t operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  std::uint16_t& operator()(Vertex u, Vertex v) { return d_[index(u, v)]; }
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }

  /// Row of distances from u, indexed by vertex.
  std::span<const std::uint16_t> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<std::uint16_t> d_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// The distance matrix is computed on first use and shared between copies;
/// initialization is guarded so concurrent readers see a single computation.
class Graph {
 public:
  /// The empty graph K_0.
  Graph();

  /// Builds a graph from an edge list. Duplicate edges collapse; loops and
  /// out-of-range endpoints throw std::invalid_argument.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from symmetric adjacency rows (one bitset per vertex).
  static Graph from_adjacency(std::vector<Bitset> rows);

  int order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
  const Bitset& neighbors(Vertex u) const { return adj_[static_cast<std::size_t>(u)]; }
  int degree(Vertex u) const { return static_cast<int>(neighbors(u).count()); }
  int max_degree() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Shortest-path hop distances, computed once on first call.
  const DistanceMatrix& distances() const;
  std::uint16_t distance(Vertex u, Vertex v) const { return distances()(u, v); }

  /// Subgraph induced by `vertices`, relabeled in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  struct DistanceCache;

  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<Bitset> adj_;
  std::shared_ptr<DistanceCache> cache_;
};

/// BFS from every vertex.
DistanceMatrix bfs_all_pairs(const Graph& g);

bool is_connected(const Graph& g);

Graph complement(const Graph& g);

/// Disjoint union of g and h (g first) with every cross pair joined.
Graph join(const Graph& g, const Graph& h);

/// Corona product: base vertices 0..n(g)-1, then copy i of h occupies
/// n(g) + i*n(h) .. n(g) + (i+1)*n(h) - 1 and is joined to base vertex i.
Graph corona(const Graph& g, const Graph& h);

/// Subdivides every edge `times` times. New vertices are appended edge by
/// edge in edges() order.
Graph subdivide(const Graph& g, int times);

/// Largest distance; throws DisconnectedGraph.
int diameter(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

struct MetricRepresentation {
  VertexList landmarks;
  std::vector<int> vector;

  friend bool operator==(const MetricRepresentation&, const MetricRepresentation&) = default;
};

/// r(u | X): the distances from u to each landmark, in landmark order.
MetricRepresentation metric_representation(const Graph& g, Vertex u, std::span<const Vertex> landmarks);

}  // namespace nldim
