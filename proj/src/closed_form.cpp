#include "nldim/closed_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "nldim/generators.hpp"
#include "nldim/structure.hpp"

namespace nldim {

int dim_tree(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("dim_tree: input is not a tree");
  if (t.order() < 3) throw std::invalid_argument("dim_tree: tree needs at least three vertices");
  if (t.max_degree() <= 2) return 1;
  const auto stats = tree_stats(t);
  return stats.leaf_count() - stats.exterior_count();
}

namespace {

// Leaves of a non-path tree forming a metric basis: every terminal leaf of
// each exterior branch vertex except the highest-numbered one.
VertexList tree_leaf_basis(const Graph& t) {
  if (t.max_degree() <= 2) {
    for (Vertex v = 0; v < t.order(); ++v)
      if (t.degree(v) <= 1) return {v};
    return {};
  }
  VertexList basis;
  for (const auto& [w, leaves] : tree_stats(t).terminal_leaves)
    basis.insert(basis.end(), leaves.begin(), leaves.end() - 1);
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace

FormulaResult dimnl_block_graph(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("dimnl_block_graph: needs at least three vertices");
  if (!is_block_graph(g)) throw std::invalid_argument("dimnl_block_graph: input is not a block graph");
  const auto bct = block_cut_tree(g);
  FormulaResult r;
  r.theorem = "block graphs: dim_nl(G) = dim(block-cutpoint tree)";
  if (bct.tree.order() == 1) {
    r.value = 0;
    r.witness = VertexList{};
    return r;
  }
  r.value = dim_tree(bct.tree);

  const auto& cuts = bct.decomposition.cut_vertices;
  VertexList witness;
  for (auto leaf : tree_leaf_basis(bct.tree)) {
    const auto& node = bct.nodes[static_cast<std::size_t>(leaf)];
    const auto& block = bct.decomposition.blocks[static_cast<std::size_t>(node.index)];
    const auto it = std::find_if(block.begin(), block.end(), [&](Vertex v) {
      return !std::binary_search(cuts.begin(), cuts.end(), v);
    });
    witness.push_back(*it);
  }
  std::sort(witness.begin(), witness.end());
  r.witness = std::move(witness);
  return r;
}

int dimnl_corona(const Graph& g, const Graph& h, const SolverOptions& options) {
  if (!is_connected(g)) throw DisconnectedGraph("dimnl_corona base");
  const auto nh = static_cast<std::size_t>(h.order());
  if (h.edge_count() == nh * (nh - 1) / 2)
    throw std::invalid_argument("dimnl_corona: second factor is complete; use corona_complete_bounds");
  return g.order() * solve_exact(join(complete(1), h), PairMode::NonAdjacent, options).value;
}

std::pair<int, int> corona_complete_bounds(const Graph& g, int n, const SolverOptions& options) {
  if (n < 1) throw std::invalid_argument("corona_complete_bounds: n must be positive");
  return {solve_exact(g, PairMode::All, options).value, g.order()};
}

namespace {

void require_wheel(int n) {
  if (n < 3) throw std::invalid_argument("wheel needs n >= 3");
}

}  // namespace

int dimnl_wheel(int n) {
  require_wheel(n);
  // W_{1,3} is K_4, whose nonlocal dimension is 0.
  static constexpr int kSmall[] = {0, 2, 2, 2};
  if (n < 7) return kSmall[n - 3];
  return 2 * n / 5;
}

int dim_wheel(int n) {
  require_wheel(n);
  static constexpr int kSmall[] = {3, 2, 2, 3};
  if (n < 7) return kSmall[n - 3];
  return (2 * n + 2) / 5;
}

int dimlocal_wheel(int n) {
  require_wheel(n);
  static constexpr int kSmall[] = {3, 2, 2, 2};
  if (n < 7) return kSmall[n - 3];
  return (n + 3) / 4;
}

VertexList wheel_basis(int n) {
  if (n < 7) throw std::invalid_argument("wheel_basis needs n >= 7");
  const int k = n / 5;
  VertexList s{0};
  switch (n % 5) {
    case 0:
    case 1:
      for (int i = 1; i <= k - 1; ++i) {
        s.push_back(5 * i);
        s.push_back(5 * i + 2);
      }
      s.push_back(5 * k - 1);
      break;
    case 2:
      for (int i = 1; i <= k - 1; ++i) {
        s.push_back(5 * i);
        s.push_back(5 * i + 2);
      }
      s.push_back(5 * k);
      break;
    default:
      for (int i = 1; i <= k; ++i) {
        s.push_back(5 * i);
        s.push_back(5 * i + 2);
      }
      break;
  }
  std::sort(s.begin(), s.end());
  return s;
}

WheelGapProfile wheel_gaps(int n, const VertexList& rim_landmarks) {
  require_wheel(n);
  VertexList xs = rim_landmarks;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() < 2) throw std::invalid_argument("gap profile needs at least two landmarks");
  for (auto x : xs)
    if (x < 0 || x >= n) throw std::invalid_argument("landmark " + std::to_string(x) + " is not a rim vertex");
  WheelGapProfile p;
  p.n = n;
  p.landmarks = xs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Vertex a = xs[i];
    const Vertex b = xs[(i + 1) % xs.size()];
    p.gaps.push_back({a, b, ((b - a - 1) % n + n) % n});
  }
  return p;
}

WheelGapReport wheel_gap_check(int n, const VertexList& rim_landmarks) {
  WheelGapReport r;
  r.profile = wheel_gaps(n, rim_landmarks);
  const auto& gaps = r.profile.gaps;
  const std::size_t k = gaps.size();
  r.at_most_four = std::all_of(gaps.begin(), gaps.end(), [](const WheelGap& g) { return g.size <= 4; });
  r.one_large_gap = std::count_if(gaps.begin(), gaps.end(), [](const WheelGap& g) { return g.size >= 3; }) <= 1;
  r.isolated_wide_gaps = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (gaps[i].size < 2) continue;
    const auto& before = gaps[(i + k - 1) % k];
    const auto& after = gaps[(i + 1) % k];
    if (before.size > 1 || after.size > 1) r.isolated_wide_gaps = false;
  }
  r.resolving = is_resolving(wheel(n), r.profile.landmarks, PairMode::NonAdjacent);
  return r;
}

VertexList remove_size_three_gap(int n, const VertexList& rim_landmarks) {
  const auto profile = wheel_gaps(n, rim_landmarks);
  VertexList s = profile.landmarks;
  const auto mod = [n](int x) { return ((x % n) + n) % n; };
  const auto contains = [&](int x) { return std::binary_search(s.begin(), s.end(), mod(x)); };
  for (const auto& gap : profile.gaps) {
    if (gap.size != 3) continue;
    const int i = gap.left;
    Vertex drop, add;
    if (!contains(i + 5)) {
      drop = mod(i + 4);
      add = mod(i + 5);
    } else if (!contains(i - 1)) {
      drop = mod(i);
      add = mod(i - 1);
    } else {
      drop = mod(i + 4);
      add = mod(i + 6);
    }
    s.erase(std::find(s.begin(), s.end(), drop));
    s.push_back(add);
    std::sort(s.begin(), s.end());
    break;
  }
  return s;
}

int wheel_gap_capacity(int k) {
  if (k < 2) throw std::invalid_argument("gap capacity needs at least two landmarks");
  const int r = k / 2;
  return k % 2 == 0 ? 3 * r + 2 : 3 * r + 3;
}

int omega_upper_bound(const Graph& g) { return g.order() - clique_number(g); }

BetaPrimeBound beta_prime_upper_bound(const Graph& g) {
  BetaPrimeBound b;
  if (!is_connected(g)) throw DisconnectedGraph("beta_prime_upper_bound");
  if (g.order() < 2) {
    b.reason = "no edge cover exists on a single vertex";
    return b;
  }
  const auto gi = girth(g);
  if (gi && *gi < 7) {
    b.reason = "girth " + std::to_string(*gi) + " is below 7";
    return b;
  }
  b.value = edge_cover_number(g) - 1;
  return b;
}

int dimnl_complete_bipartite(int s, int t) {
  if (s < 1 || t < 2) throw std::invalid_argument("dimnl_complete_bipartite needs s >= 1 and t >= 2");
  return s + t - 2;
}

bool is_subdivided_star(const Graph& t) {
  if (!is_tree(t)) return false;
  Vertex center = -1;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 3) {
      if (center >= 0) return false;
      center = v;
    }
  }
  if (center < 0) return false;
  bool has_short_leg = false;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) != 1) continue;
    const int leg = t.distance(center, v);
    if (leg > 2) return false;
    if (leg == 1) has_short_leg = true;
  }
  return has_short_leg;
}

}  // namespace nldim
