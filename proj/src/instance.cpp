#include <bit>
#include <cstdlib>
#include <string>

#include "nldim/solver.hpp"

namespace nldim {

std::string_view to_string(PairMode mode) {
  switch (mode) {
    case PairMode::All: return "full";
    case PairMode::NonAdjacent: return "nonlocal";
    case PairMode::Adjacent: return "local";
  }
  return "?";
}

PairMode parse_pair_mode(std::string_view text) {
  if (text == "full" || text == "all") return PairMode::All;
  if (text == "nonlocal" || text == "nonadjacent") return PairMode::NonAdjacent;
  if (text == "local" || text == "adjacent") return PairMode::Adjacent;
  throw std::invalid_argument("unknown pair mode '" + std::string(text) + "'");
}

namespace {

bool wanted(const Graph& g, Vertex u, Vertex v, PairMode mode) {
  switch (mode) {
    case PairMode::All: return true;
    case PairMode::NonAdjacent: return !g.adjacent(u, v);
    case PairMode::Adjacent: return g.adjacent(u, v);
  }
  return false;
}

std::vector<Edge> list_pairs(const Graph& g, PairMode mode) {
  if (!is_connected(g)) throw DisconnectedGraph("resolution instance");
  std::vector<Edge> pairs;
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (wanted(g, u, v, mode)) {
        pairs.emplace_back(u, v);
        if (pairs.size() > kMaxPairs)
          throw std::length_error("resolution instance exceeds " + std::to_string(kMaxPairs) + " pairs");
      }
  return pairs;
}

}  // namespace

ResolutionInstance build_instance(const Graph& g, PairMode mode) {
  ResolutionInstance inst;
  inst.order = g.order();
  inst.mode = mode;
  inst.pairs = list_pairs(g, mode);
  const auto& d = g.distances();
  const int n = g.order();
  const auto np = static_cast<long>(inst.pairs.size());

  inst.distinguishers.assign(static_cast<std::size_t>(n), Bitset(inst.pairs.size()));
  inst.coverers.assign(inst.pairs.size(), Bitset(static_cast<std::size_t>(n)));

  // Vertex-major: each thread owns whole distinguisher rows.
#pragma omp parallel for schedule(static) if (np * n > 4096)
  for (int x = 0; x < n; ++x) {
    const auto row = d.row(x);
    auto& dx = inst.distinguishers[static_cast<std::size_t>(x)];
    for (long p = 0; p < np; ++p) {
      const auto [u, v] = inst.pairs[static_cast<std::size_t>(p)];
      if (row[static_cast<std::size_t>(u)] != row[static_cast<std::size_t>(v)]) dx.set(static_cast<std::size_t>(p));
    }
  }
  // Transpose one 64-pair word at a time; each thread owns the coverer rows
  // of its words.
  const auto words = static_cast<long>((inst.pairs.size() + 63) / 64);
#pragma omp parallel for schedule(static) if (np * n > 4096)
  for (long w = 0; w < words; ++w) {
    for (int x = 0; x < n; ++x) {
      for (auto bits = inst.distinguishers[static_cast<std::size_t>(x)].data()[w]; bits; bits &= bits - 1) {
        const auto p = static_cast<std::size_t>(w) * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        inst.coverers[p].set(static_cast<std::size_t>(x));
      }
    }
  }
  return inst;
}

namespace reference {

ResolutionInstance build_instance(const Graph& g, PairMode mode) {
  ResolutionInstance inst;
  inst.order = g.order();
  inst.mode = mode;
  inst.pairs = list_pairs(g, mode);
  const auto& d = g.distances();
  const int n = g.order();
  inst.distinguishers.assign(static_cast<std::size_t>(n), Bitset(inst.pairs.size()));
  inst.coverers.assign(inst.pairs.size(), Bitset(static_cast<std::size_t>(n)));
  for (std::size_t p = 0; p < inst.pairs.size(); ++p) {
    const auto [u, v] = inst.pairs[p];
    for (Vertex x = 0; x < n; ++x)
      if (d(x, u) != d(x, v)) {
        inst.distinguishers[static_cast<std::size_t>(x)].set(p);
        inst.coverers[p].set(static_cast<std::size_t>(x));
      }
  }
  return inst;
}

}  // namespace reference

std::optional<Edge> first_unresolved_pair(const Graph& g, std::span<const Vertex> landmarks, PairMode mode) {
  const int n = g.order();
  for (auto x : landmarks)
    if (x < 0 || x >= n) throw std::invalid_argument("landmark " + std::to_string(x) + " out of range");
  if (!is_connected(g)) throw DisconnectedGraph("is_resolving");
  const auto& d = g.distances();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!wanted(g, u, v, mode)) continue;
      bool separated = false;
      for (auto x : landmarks)
        if (d(x, u) != d(x, v)) {
          separated = true;
          break;
        }
      if (!separated) return Edge{u, v};
    }
  return std::nullopt;
}

bool is_resolving(const Graph& g, std::span<const Vertex> landmarks, PairMode mode) {
  return !first_unresolved_pair(g, landmarks, mode).has_value();
}

SolverOptions SolverOptions::from_environment() {
  SolverOptions o;
  if (const char* env = std::getenv("NLDIM_BUDGET"); env && *env) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) o.node_budget = v;
  }
  return o;
}

}  // namespace nldim
