#include "nldim/embed.hpp"

#include <algorithm>
#include <numeric>

#include "nldim/structure.hpp"

namespace nldim {

bool anchor_bit(int label, int j, int k) { return (label >> (k - 1 - j)) & 1; }

namespace {

int ceil_log2(int s) {
  int k = 0;
  while ((1 << k) < s) ++k;
  return k;
}

bool classes_touch(const Graph& g, const VertexList& a, const VertexList& b) {
  for (auto u : a)
    for (auto v : b)
      if (g.adjacent(u, v)) return true;
  return false;
}

}  // namespace

EmbeddingResult embed_supergraph(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("embed_supergraph");
  const int n = g.order();
  EmbeddingResult r;
  r.embedding.resize(static_cast<std::size_t>(n));
  std::iota(r.embedding.begin(), r.embedding.end(), 0);

  auto coloring = chromatic_number(complement(g));
  r.classes = std::move(coloring.classes);
  r.s = coloring.colors;
  if (r.s <= 1) {
    r.host = g;
    r.k = 0;
    return r;
  }
  r.k = ceil_log2(r.s);

  // First ordered pair (a, b), a < b, joined by an edge becomes (0, s-1).
  const auto s = static_cast<std::size_t>(r.s);
  bool found = false;
  for (std::size_t a = 0; a < s && !found; ++a)
    for (std::size_t b = a + 1; b < s && !found; ++b)
      if (classes_touch(g, r.classes[a], r.classes[b])) {
        std::swap(r.classes[0], r.classes[a]);
        std::swap(r.classes[s - 1], r.classes[b]);
        found = true;
      }
  if (!found) throw std::logic_error("connected graph with no edge between colour classes");

  std::vector<Edge> es = g.edges();
  for (int j = 0; j < r.k; ++j) {
    r.anchor.push_back(n + j);
    for (int j2 = j + 1; j2 < r.k; ++j2) es.emplace_back(n + j, n + j2);
  }
  for (int i = 0; i < r.s; ++i)
    for (int j = 0; j < r.k; ++j)
      if (!anchor_bit(i, j, r.k))
        for (auto v : r.classes[static_cast<std::size_t>(i)]) es.emplace_back(n + j, v);
  r.host = Graph(n + r.k, es);
  return r;
}

EmbeddingReport verify_embedding(const Graph& g, const EmbeddingResult& r, int solve_limit,
                                 const SolverOptions& options) {
  EmbeddingReport rep;
  const auto& h = r.host;

  rep.induced = h.induced(r.embedding) == g;
  if (!rep.induced) rep.violations.push_back("G is not induced in H under the embedding");

  const auto unresolved = first_unresolved_pair(h, r.anchor, PairMode::NonAdjacent);
  rep.anchor_resolving = !unresolved.has_value();
  if (unresolved)
    rep.violations.push_back("anchor leaves non-adjacent pair (" + std::to_string(unresolved->first) + ", " +
                             std::to_string(unresolved->second) + ") unresolved");

  rep.diameter = diameter(h);
  rep.diameter_at_most_4 = rep.diameter <= 4;
  if (!rep.diameter_at_most_4) rep.violations.push_back("diam(H) = " + std::to_string(rep.diameter) + " exceeds 4");

  rep.below_power_of_two = r.s >= 2 && r.s < (1 << r.k);
  rep.diameter_at_most_3 = rep.diameter <= 3;
  if (rep.below_power_of_two && !rep.diameter_at_most_3)
    rep.violations.push_back("s < 2^k but diam(H) = " + std::to_string(rep.diameter));
  rep.statement_range = r.k >= 1 && (1 << (r.k - 1)) <= r.s && r.s < (1 << r.k);

  if (static_cast<int>(r.anchor.size()) != r.k)
    rep.violations.push_back("anchor size differs from k");
  if (solve_limit > 0 && h.order() <= solve_limit) {
    rep.solved_dimension = solve_exact(h, PairMode::NonAdjacent, options).value;
    rep.solved_within_bound = *rep.solved_dimension <= r.k;
    if (!rep.solved_within_bound)
      rep.violations.push_back("dim_nl(H) = " + std::to_string(*rep.solved_dimension) + " exceeds k = " +
                               std::to_string(r.k));
  }
  return rep;
}

}  // namespace nldim
