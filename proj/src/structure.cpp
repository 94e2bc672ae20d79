#include "nldim/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nldim {

// ---------------------------------------------------------------- cliques

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexList run() {
    const auto n = static_cast<std::size_t>(g_.order());
    Bitset candidates(n);
    candidates.set_all();
    VertexList current;
    expand(current, candidates);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy sequential colouring of the candidates gives, for the i-th vertex
  // in colour order, an upper bound on the clique it can still complete.
  void expand(VertexList& current, Bitset candidates) {
    std::vector<std::size_t> order;
    std::vector<int> bound;
    Bitset uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset available = uncolored;
      for (auto v = available.find_first(); v < available.size(); v = available.find_next(v + 1)) {
        order.push_back(v);
        bound.push_back(color);
        uncolored.reset(v);
        available.and_not(g_.neighbors(static_cast<Vertex>(v)));
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const auto v = order[i];
      current.push_back(static_cast<Vertex>(v));
      Bitset next = candidates;
      next &= g_.neighbors(static_cast<Vertex>(v));
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  const Graph& g_;
  VertexList best_;
};

}  // namespace

VertexList maximum_clique(const Graph& g) {
  if (g.order() == 0) return {};
  return CliqueSearch(g).run();
}

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

// --------------------------------------------------------------- colouring

namespace {

class ColoringSearch {
 public:
  explicit ColoringSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    color_.assign(static_cast<std::size_t>(n_), -1);
    // Greedy DSATUR pass fixes the initial upper bound.
    greedy_ = true;
    best_colors_ = n_ + 1;
    search(0, 0);
    greedy_ = false;
    lower_ = clique_number(g_);
    if (best_colors_ > lower_) {
      color_.assign(static_cast<std::size_t>(n_), -1);
      search(0, 0);
    }
    return best_;
  }

 private:
  Vertex pick_vertex() const {
    Vertex pick = -1;
    int best_sat = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[static_cast<std::size_t>(v)] >= 0) continue;
      std::vector<bool> seen(static_cast<std::size_t>(n_), false);
      int sat = 0;
      g_.neighbors(v).for_each([&](std::size_t w) {
        const int c = color_[w];
        if (c >= 0 && !seen[static_cast<std::size_t>(c)]) {
          seen[static_cast<std::size_t>(c)] = true;
          ++sat;
        }
      });
      if (sat > best_sat) {
        best_sat = sat;
        pick = v;
      }
    }
    return pick;
  }

  bool usable(Vertex v, int c) const {
    bool ok = true;
    g_.neighbors(v).for_each([&](std::size_t w) {
      if (color_[w] == c) ok = false;
    });
    return ok;
  }

  // Returns true once the search can stop (optimum proven).
  bool search(int colored, int used) {
    if (colored == n_) {
      if (used < best_colors_) {
        best_colors_ = used;
        best_ = color_;
      }
      return greedy_ || best_colors_ <= lower_;
    }
    const Vertex v = pick_vertex();
    const int limit = std::min(used + 1, best_colors_ - 1);
    for (int c = 0; c < limit; ++c) {
      if (!usable(v, c)) continue;
      color_[static_cast<std::size_t>(v)] = c;
      const bool done = search(colored + 1, std::max(used, c + 1));
      color_[static_cast<std::size_t>(v)] = -1;
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  bool greedy_ = false;
  int lower_ = 0;
  int best_colors_ = 0;
  std::vector<int> color_;
  std::vector<int> best_;
};

}  // namespace

Coloring chromatic_number(const Graph& g) {
  Coloring out;
  if (g.order() == 0) return out;
  auto raw = ColoringSearch(g).run();
  // Relabel colours by first appearance in vertex order.
  std::vector<int> relabel(raw.size() + 1, -1);
  int next = 0;
  out.color_of.resize(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    auto& r = relabel[static_cast<std::size_t>(raw[v])];
    if (r < 0) r = next++;
    out.color_of[v] = r;
  }
  out.colors = next;
  out.classes.assign(static_cast<std::size_t>(next), {});
  for (std::size_t v = 0; v < raw.size(); ++v)
    out.classes[static_cast<std::size_t>(out.color_of[v])].push_back(static_cast<Vertex>(v));
  return out;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& color_of) {
  if (color_of.size() != static_cast<std::size_t>(g.order())) return false;
  for (auto [u, v] : g.edges())
    if (color_of[static_cast<std::size_t>(u)] == color_of[static_cast<std::size_t>(v)]) return false;
  return std::all_of(color_of.begin(), color_of.end(), [](int c) { return c >= 0; });
}

// ---------------------------------------------------------------- matching

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(static_cast<std::size_t>(g.order())), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<Vertex> run() {
    for (std::size_t root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      Vertex v = find_augmenting_path(static_cast<Vertex>(root));
      while (v != -1) {
        const Vertex pv = parent_[at(v)];
        const Vertex next = mate_[at(pv)];
        mate_[at(v)] = pv;
        mate_[at(pv)] = v;
        v = next;
      }
    }
    return mate_;
  }

 private:
  static std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[at(a)];
      seen[at(a)] = true;
      if (mate_[at(a)] == -1) break;
      a = parent_[at(mate_[at(a)])];
    }
    while (true) {
      b = base_[at(b)];
      if (seen[at(b)]) return b;
      b = parent_[at(mate_[at(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[at(v)] != b) {
      in_blossom_[at(base_[at(v)])] = true;
      in_blossom_[at(base_[at(mate_[at(v)])])] = true;
      parent_[at(v)] = child;
      child = mate_[at(v)];
      v = parent_[at(mate_[at(v)])];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[at(root)] = true;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (auto w = g_.neighbors(v).find_first(); w < n_; w = g_.neighbors(v).find_next(w + 1)) {
        const auto to = static_cast<Vertex>(w);
        if (base_[at(v)] == base_[w] || mate_[at(v)] == to) continue;
        if (to == root || (mate_[w] != -1 && parent_[at(mate_[w])] != -1)) {
          const Vertex b = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (std::size_t i = 0; i < n_; ++i)
            if (in_blossom_[at(base_[i])]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(static_cast<Vertex>(i));
              }
            }
        } else if (parent_[w] == -1) {
          parent_[w] = v;
          if (mate_[w] == -1) return to;
          used_[at(mate_[w])] = true;
          queue.push_back(mate_[w]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> mate_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

}  // namespace

std::vector<Vertex> maximum_matching(const Graph& g) { return Blossom(g).run(); }

int matching_size(const std::vector<Vertex>& mate) {
  int pairs = 0;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] > static_cast<Vertex>(v)) ++pairs;
  return pairs;
}

int edge_cover_number(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) throw std::invalid_argument("edge cover undefined: vertex " + std::to_string(v) + " is isolated");
  return g.order() - matching_size(maximum_matching(g));
}

// ------------------------------------------------------------- bipartition

std::optional<std::pair<VertexList, VertexList>> bipartition(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("bipartition");
  const int n = g.order();
  std::pair<VertexList, VertexList> out;
  if (n == 0) return out;
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  side[0] = 0;
  std::vector<Vertex> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    bool odd = false;
    g.neighbors(u).for_each([&](std::size_t w) {
      if (side[w] < 0) {
        side[w] = 1 - side[static_cast<std::size_t>(u)];
        queue.push_back(static_cast<Vertex>(w));
      } else if (side[w] == side[static_cast<std::size_t>(u)]) {
        odd = true;
      }
    });
    if (odd) return std::nullopt;
  }
  for (Vertex v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? out.first : out.second).push_back(v);
  return out;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

bool is_path_graph(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

// ------------------------------------------------------------------ blocks

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("block decomposition");
  const int n = g.order();
  BlockDecomposition out;
  if (n == 0) return out;
  if (n == 1) {
    out.blocks.push_back({0});
    return out;
  }

  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    g.neighbors(u).for_each([&](std::size_t w) {
      const auto v = static_cast<Vertex>(w);
      if (v == parent) return;
      if (disc[w] < 0) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[w]);
        if (low[w] >= disc[static_cast<std::size_t>(u)]) {
          VertexList block;
          while (true) {
            const auto e = stack.back();
            stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == Edge{u, v}) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[static_cast<std::size_t>(u)]) {
        stack.emplace_back(u, v);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[w]);
      }
    });
  };
  dfs(0, -1);

  std::sort(out.blocks.begin(), out.blocks.end(), [](const VertexList& a, const VertexList& b) {
    if (a.front() != b.front()) return a.front() < b.front();
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<int> memberships(static_cast<std::size_t>(n), 0);
  for (const auto& b : out.blocks)
    for (auto v : b) ++memberships[static_cast<std::size_t>(v)];
  for (Vertex v = 0; v < n; ++v)
    if (memberships[static_cast<std::size_t>(v)] >= 2) out.cut_vertices.push_back(v);
  return out;
}

bool is_block_graph(const Graph& g) {
  for (const auto& block : block_decomposition(g).blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!g.adjacent(block[i], block[j])) return false;
  return true;
}

BlockCutTree block_cut_tree(const Graph& g) {
  BlockCutTree out;
  out.decomposition = block_decomposition(g);
  const auto& blocks = out.decomposition.blocks;
  const auto& cuts = out.decomposition.cut_vertices;
  const int nb = static_cast<int>(blocks.size());
  for (int b = 0; b < nb; ++b) out.nodes.push_back({BlockCutNode::Kind::Block, b});
  for (auto c : cuts) out.nodes.push_back({BlockCutNode::Kind::Cut, c});
  std::vector<Edge> es;
  for (int b = 0; b < nb; ++b)
    for (auto v : blocks[static_cast<std::size_t>(b)]) {
      const auto it = std::lower_bound(cuts.begin(), cuts.end(), v);
      if (it != cuts.end() && *it == v) es.emplace_back(b, nb + static_cast<int>(it - cuts.begin()));
    }
  out.tree = Graph(static_cast<int>(out.nodes.size()), es);
  return out;
}

// -------------------------------------------------------------------- trees

int TreeStats::terminal_paths(Vertex w) const {
  const auto it = terminal_leaves.find(w);
  return it == terminal_leaves.end() ? 0 : static_cast<int>(it->second.size());
}

TreeStats tree_stats(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_stats: input is not a tree");
  if (t.max_degree() <= 2) throw std::invalid_argument("tree_stats: input is a path");
  TreeStats s;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) == 1) s.leaves.push_back(v);
    if (t.degree(v) >= 3) s.branch_vertices.push_back(v);
  }
  const auto& d = t.distances();
  // A leaf is terminal for w only if it is strictly closer to w than to any
  // other branch vertex.
  for (auto leaf : s.leaves) {
    Vertex owner = -1;
    int best = -1;
    bool tie = false;
    for (auto w : s.branch_vertices) {
      const int dw = d(leaf, w);
      if (owner < 0 || dw < best) {
        owner = w;
        best = dw;
        tie = false;
      } else if (dw == best) {
        tie = true;
      }
    }
    if (!tie) s.terminal_leaves[owner].push_back(leaf);
  }
  for (const auto& [w, leaves] : s.terminal_leaves) s.exterior_branch_vertices.push_back(w);
  return s;
}

std::vector<VertexList> distance_levels(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.order()) throw std::invalid_argument("distance_levels: vertex out of range");
  if (!is_connected(g)) throw DisconnectedGraph("distance_levels");
  std::vector<VertexList> levels;
  const auto row = g.distances().row(x);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto k = static_cast<std::size_t>(row[static_cast<std::size_t>(v)]);
    if (levels.size() <= k) levels.resize(k + 1);
    levels[k].push_back(v);
  }
  return levels;
}

}  // namespace nldim
