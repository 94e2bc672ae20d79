#include "nldim/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace nldim {

namespace {

constexpr int slot(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

void require_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumeration order must lie in 1.." + std::to_string(kMaxEnumerationOrder));
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> es;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((mask >> slot(i, j)) & 1) es.emplace_back(i, j);
  return Graph(n, es);
}

bool mask_connected(int n, std::uint64_t mask) {
  std::uint32_t adj[16] = {};
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((mask >> slot(i, j)) & 1) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n >= 32 ? ~0u : (1u << n) - 1);
}

std::vector<std::uint32_t> connected_masks(int n) {
  require_order(n);
  std::vector<std::uint32_t> out;
  const std::uint64_t total = std::uint64_t{1} << pair_slots(n);
  for (std::uint64_t m = 0; m < total; ++m)
    if (mask_connected(n, m)) out.push_back(static_cast<std::uint32_t>(m));
  return out;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw std::invalid_argument("canonical_code supports n <= 11");
  VertexList order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  // Cells of equal degree; permute within each cell independently.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && g.degree(order[j]) == g.degree(order[i])) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  const auto encode = [&] {
    std::uint64_t m = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
          m |= std::uint64_t{1} << slot(i, j);
    return m;
  };
  // Odometer over the cartesian product of per-cell permutations.
  while (true) {
    best = std::min(best, encode());
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(cells[c].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(cells[c].second);
      if (std::next_permutation(first, last)) break;
    }
    if (c == cells.size()) break;
  }
  // The minimum mask is itself a relabeled copy of g, so equal codes imply
  // isomorphic graphs.
  return best;
}

void enumerate_connected(int n, bool canonical, const std::function<bool(const Graph&)>& visit) {
  require_order(n);
  std::unordered_set<std::uint64_t> seen;
  const std::uint64_t total = std::uint64_t{1} << pair_slots(n);
  for (std::uint64_t m = 0; m < total; ++m) {
    if (!mask_connected(n, m)) continue;
    Graph g = graph_from_mask(n, m);
    if (canonical && !seen.insert(canonical_code(g)).second) continue;
    if (!visit(g)) return;
  }
}

}  // namespace nldim
