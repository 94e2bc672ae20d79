#include "nldim/graph.hpp"

#include <algorithm>
#include <mutex>
#include <queue>
#include <string>

namespace nldim {

struct Graph::DistanceCache {
  std::once_flag once;
  DistanceMatrix matrix;
};

Graph::Graph() : cache_(std::make_shared<DistanceCache>()) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), cache_(std::make_shared<DistanceCache>()) {
  if (n < 0 || n > kMaxOrder)
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
  adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (!adjacent(u, v)) {
      adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
      adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
      ++m_;
    }
  }
}

Graph Graph::from_adjacency(std::vector<Bitset> rows) {
  Graph g;
  const auto n = rows.size();
  if (n > static_cast<std::size_t>(kMaxOrder)) throw std::invalid_argument("graph order exceeds limit");
  std::size_t twice_m = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (rows[u].size() != n) throw std::invalid_argument("adjacency row has wrong width");
    if (rows[u].test(u)) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    rows[u].for_each([&](std::size_t v) {
      if (!rows[v].test(u)) throw std::invalid_argument("adjacency is not symmetric");
    });
    twice_m += rows[u].count();
  }
  g.n_ = static_cast<int>(n);
  g.m_ = twice_m / 2;
  g.adj_ = std::move(rows);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    neighbors(u).for_each([&](std::size_t v) {
      if (static_cast<Vertex>(v) > u) out.emplace_back(u, static_cast<Vertex>(v));
    });
  return out;
}

const DistanceMatrix& Graph::distances() const {
  std::call_once(cache_->once, [this] { cache_->matrix = bfs_all_pairs(*this); });
  return cache_->matrix;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(static_cast<int>(vertices.size()), es);
}

DistanceMatrix bfs_all_pairs(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d(n);
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::size_t head = 0, tail = 0;
    d(s, s) = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      const auto du = d(s, u);
      g.neighbors(u).for_each([&](std::size_t w) {
        const auto v = static_cast<Vertex>(w);
        if (d(s, v) == DistanceMatrix::kUnreachable) {
          d(s, v) = static_cast<std::uint16_t>(du + 1);
          queue[tail++] = v;
        }
      });
    }
  }
  return d;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  Bitset seen(static_cast<std::size_t>(n));
  Bitset frontier(static_cast<std::size_t>(n));
  seen.set(0);
  frontier.set(0);
  while (frontier.any()) {
    Bitset next(static_cast<std::size_t>(n));
    frontier.for_each([&](std::size_t u) { next |= g.neighbors(static_cast<Vertex>(u)); });
    next.and_not(seen);
    seen |= next;
    frontier = std::move(next);
  }
  return seen.count() == static_cast<std::size_t>(n);
}

Graph complement(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    Bitset r = g.neighbors(static_cast<Vertex>(u));
    Bitset all(n);
    all.set_all();
    all.reset(u);
    all.and_not(r);
    rows.push_back(std::move(all));
  }
  return Graph::from_adjacency(std::move(rows));
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(u, v);
  for (auto [u, v] : h.edges()) es.emplace_back(a + u, a + v);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return Graph(a + b, es);
}

Graph corona(const Graph& g, const Graph& h) {
  if (!is_connected(g)) throw DisconnectedGraph("corona base");
  const int a = g.order();
  const int b = h.order();
  std::vector<Edge> es = g.edges();
  const auto hedges = h.edges();
  for (Vertex i = 0; i < a; ++i) {
    const int offset = a + i * b;
    for (auto [u, v] : hedges) es.emplace_back(offset + u, offset + v);
    for (Vertex v = 0; v < b; ++v) es.emplace_back(i, offset + v);
  }
  return Graph(a + a * b, es);
}

Graph subdivide(const Graph& g, int times) {
  if (times < 0) throw std::invalid_argument("subdivision count must be nonnegative");
  int next = g.order();
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    Vertex prev = u;
    for (int t = 0; t < times; ++t) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    es.emplace_back(prev, v);
  }
  return Graph(next, es);
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("diameter");
  const auto& d = g.distances();
  int best = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (auto x : d.row(u)) best = std::max(best, static_cast<int>(x));
  return best;
}

std::optional<int> girth(const Graph& g) {
  // BFS from each root; a non-tree edge (u, v) closes a cycle of length at
  // most d(u) + d(v) + 1, and the minimum over all roots is exact.
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::size_t head = 0, tail = 0;
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      const auto du = dist[static_cast<std::size_t>(u)];
      if (2 * du + 1 >= best) break;
      g.neighbors(u).for_each([&](std::size_t w) {
        const auto v = static_cast<Vertex>(w);
        if (dist[w] < 0) {
          dist[w] = du + 1;
          parent[w] = u;
          queue[tail++] = v;
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          best = std::min(best, du + dist[w] + 1);
        }
      });
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

MetricRepresentation metric_representation(const Graph& g, Vertex u, std::span<const Vertex> landmarks) {
  MetricRepresentation r;
  r.landmarks.assign(landmarks.begin(), landmarks.end());
  const auto& d = g.distances();
  for (auto x : landmarks) {
    if (!d.reachable(u, x)) throw DisconnectedGraph("metric representation");
    r.vector.push_back(d(u, x));
  }
  return r;
}

}  // namespace nldim
