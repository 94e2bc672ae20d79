#include "nldim/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace nldim {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

int param(const FamilySpec& spec, std::size_t i) {
  require(i < spec.params.size(), "family '" + spec.name + "' needs at least " + std::to_string(i + 1) + " parameter(s)");
  const auto v = spec.params[i];
  require(v >= 0 && v <= kMaxOrder, "family parameter out of range");
  return static_cast<int>(v);
}

std::uint64_t param_seed(const FamilySpec& spec, std::size_t i) {
  return i < spec.params.size() ? static_cast<std::uint64_t>(spec.params[i]) : 0;
}

}  // namespace

Graph empty_graph(int n) {
  require(n >= 0, "order must be nonnegative");
  return Graph(n, std::span<const Edge>{});
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "complete bipartite needs s, t >= 1");
  std::vector<Edge> es;
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = 0; v < t; ++v) es.emplace_back(u, s + v);
  return Graph(s + t, es);
}

Graph star(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  return complete_bipartite(1, leaves);
}

Graph wheel(int n) {
  require(n >= 3, "wheel needs n >= 3");
  return join(cycle(n), complete(1));
}

Graph spider(const std::vector<int>& legs) {
  std::vector<Edge> es;
  Vertex next = 1;
  for (int len : legs) {
    require(len >= 1, "spider legs must have length >= 1");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, es);
}

Graph petersen() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, es);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  if (n <= 2) return path(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(static_cast<std::size_t>(n - 2));
  for (auto& x : prufer) x = pick(rng);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : prufer) ++degree[static_cast<std::size_t>(x)];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  std::vector<Edge> es;
  for (int x : prufer) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.emplace_back(leaf, x);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  es.emplace_back(a, b);
  return Graph(n, es);
}

Graph random_block_graph(const std::vector<int>& block_sizes, std::uint64_t seed) {
  require(!block_sizes.empty(), "block graph needs at least one block");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  int n = 0;
  for (std::size_t j = 0; j < block_sizes.size(); ++j) {
    const int size = block_sizes[j];
    require(size >= 2, "blocks must have at least two vertices");
    VertexList members;
    if (j == 0) {
      members.push_back(n++);
    } else {
      std::uniform_int_distribution<int> pick(0, n - 1);
      members.push_back(pick(rng));
    }
    for (int i = 1; i < size; ++i) members.push_back(n++);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) es.emplace_back(members[a], members[b]);
  }
  return Graph(n, es);
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  const Graph tree = random_tree(n, seed);
  std::vector<Edge> es = tree.edges();
  std::mt19937_64 rng(derive_seed(seed, 1));
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!tree.adjacent(u, v) && coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph random_bipartite_connected(int n, double p, std::uint64_t seed) {
  require(n >= 2, "bipartite graph needs n >= 2");
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> side(static_cast<std::size_t>(n));
  for (auto& s : side) s = coin(rng) ? 1 : 0;
  side[0] = 0;
  side[1] = 1;
  VertexList left, right;
  for (Vertex v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] ? right : left).push_back(v);

  // Attach vertices in random order, each to a random earlier vertex on the
  // opposite side; both sides are seeded with vertices 0 and 1.
  VertexList order(static_cast<std::size_t>(n - 2));
  std::iota(order.begin(), order.end(), 2);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> es{{0, 1}};
  VertexList placed[2] = {{0}, {1}};
  for (Vertex v : order) {
    const int s = side[static_cast<std::size_t>(v)];
    const auto& other = placed[1 - s];
    std::uniform_int_distribution<std::size_t> pick(0, other.size() - 1);
    es.emplace_back(v, other[pick(rng)]);
    placed[s].push_back(v);
  }
  std::bernoulli_distribution extra(p);
  for (Vertex u : left)
    for (Vertex v : right)
      if (extra(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<std::string> family_names() {
  return {"path",   "cycle",  "complete",    "complete_bipartite", "star",          "wheel",
          "spider", "petersen", "random_tree", "random_block_graph", "random_connected"};
}

Graph generate(const FamilySpec& spec) {
  const auto& name = spec.name;
  if (name == "path") return path(param(spec, 0));
  if (name == "cycle") return cycle(param(spec, 0));
  if (name == "complete") return complete(param(spec, 0));
  if (name == "complete_bipartite") return complete_bipartite(param(spec, 0), param(spec, 1));
  if (name == "star") return star(param(spec, 0));
  if (name == "wheel") return wheel(param(spec, 0));
  if (name == "petersen") return petersen();
  if (name == "spider") {
    std::vector<int> legs;
    for (std::size_t i = 0; i < spec.params.size(); ++i) legs.push_back(param(spec, i));
    require(!legs.empty(), "spider needs leg lengths");
    return spider(legs);
  }
  if (name == "random_tree") return random_tree(param(spec, 0), param_seed(spec, 1));
  if (name == "random_connected") return random_connected(param(spec, 0), spec.probability, param_seed(spec, 1));
  if (name == "random_block_graph") {
    // params: seed, then block sizes
    require(spec.params.size() >= 2, "random_block_graph needs a seed and block sizes");
    std::vector<int> sizes;
    for (std::size_t i = 1; i < spec.params.size(); ++i) sizes.push_back(param(spec, i));
    return random_block_graph(sizes, param_seed(spec, 0));
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace nldim
