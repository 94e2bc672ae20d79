#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <set>

#include "nldim/solver.hpp"

namespace nldim {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;

// Branch and bound for minimum set cover over pair indices.
//
// Each node branches on the uncovered pair with the fewest admissible
// coverers, trying coverers in ascending vertex order; a coverer that has
// been tried is excluded from its later siblings, so every cover is reached
// along exactly one path. The bound is the larger of a disjoint-pair packing
// (pairs whose admissible coverers are pairwise disjoint need distinct
// vertices) and ceil(uncovered / best single coverage).
class CoverSearch {
 public:
  CoverSearch(const ResolutionInstance& inst, std::uint64_t budget)
      : inst_(inst), n_(static_cast<std::size_t>(inst.order)), budget_(budget) {
    order_.resize(inst.pair_count());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return inst.coverers[a].count() < inst.coverers[b].count();
    });
  }

  /// Minimization: improves on `incumbent` (size = upper bound) if possible.
  VertexList minimize(VertexList incumbent) {
    best_ = std::move(incumbent);
    enumerate_ = false;
    run();
    return best_;
  }

  /// Collects covers of exactly `target` vertices, stopping after `limit`+1.
  std::vector<VertexList> enumerate(int target, std::size_t limit) {
    enumerate_ = true;
    target_ = target;
    limit_ = limit;
    found_.clear();
    run();
    return found_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void run() {
    Bitset uncovered(inst_.pair_count());
    uncovered.set_all();
    Bitset excluded(n_);
    chosen_.clear();
    stop_ = false;
    expand(uncovered, excluded);
  }

  int bound_limit() const { return enumerate_ ? target_ + 1 : static_cast<int>(best_.size()); }

  void expand(const Bitset& uncovered, const Bitset& excluded) {
    if (++nodes_ > budget_) throw BudgetExceeded(budget_);
    const int depth = static_cast<int>(chosen_.size());

    if (uncovered.none()) {
      if (enumerate_) {
        if (depth == target_) {
          VertexList s = chosen_;
          std::sort(s.begin(), s.end());
          found_.push_back(std::move(s));
          if (found_.size() > limit_) stop_ = true;
        }
      } else if (depth < static_cast<int>(best_.size())) {
        best_ = chosen_;
        std::sort(best_.begin(), best_.end());
      }
      return;
    }
    if (depth + 1 >= bound_limit()) return;

    std::size_t branch_pair = 0;
    const int lb = lower_bound(uncovered, excluded, branch_pair);
    if (lb >= kInfeasible || depth + lb >= bound_limit()) return;

    Bitset candidates = inst_.coverers[branch_pair];
    candidates.and_not(excluded);
    Bitset local_excluded = excluded;
    for (std::size_t v = candidates.find_first(); v < n_; v = candidates.find_next(v + 1)) {
      Bitset next = uncovered;
      next.and_not(inst_.distinguishers[v]);
      chosen_.push_back(static_cast<Vertex>(v));
      expand(next, local_excluded);
      chosen_.pop_back();
      if (stop_) return;
      local_excluded.set(v);
      if (depth + 1 >= bound_limit()) return;
    }
  }

  int lower_bound(const Bitset& uncovered, const Bitset& excluded, std::size_t& branch_pair) {
    Bitset used(n_);
    int packing = 0;
    std::size_t fewest = n_ + 1;
    for (std::size_t p : order_) {
      if (!uncovered.test(p)) continue;
      const auto& cov = inst_.coverers[p];
      const std::size_t admissible = cov.count_and_not(excluded);
      if (admissible == 0) return kInfeasible;
      if (admissible < fewest) {
        fewest = admissible;
        branch_pair = p;
      }
      bool disjoint = true;
      const auto* c = cov.data();
      const auto* e = excluded.data();
      auto* u = used.data();
      for (std::size_t w = 0; w < used.word_count(); ++w)
        if (c[w] & ~e[w] & u[w]) {
          disjoint = false;
          break;
        }
      if (disjoint) {
        ++packing;
        for (std::size_t w = 0; w < used.word_count(); ++w) u[w] |= c[w] & ~e[w];
      }
    }

    const std::size_t remaining = uncovered.count();
    std::size_t best_gain = 0;
    for (std::size_t v = 0; v < n_; ++v)
      if (!excluded.test(v)) best_gain = std::max(best_gain, inst_.distinguishers[v].count_and(uncovered));
    if (best_gain == 0) return kInfeasible;
    const int ratio = static_cast<int>((remaining + best_gain - 1) / best_gain);
    return std::max(packing, ratio);
  }

  const ResolutionInstance& inst_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> order_;
  VertexList chosen_;
  VertexList best_;
  bool enumerate_ = false;
  bool stop_ = false;
  int target_ = 0;
  std::size_t limit_ = 0;
  std::vector<VertexList> found_;
};

}  // namespace

VertexList greedy_upper_bound(const ResolutionInstance& inst) {
  const auto n = static_cast<std::size_t>(inst.order);
  Bitset uncovered(inst.pair_count());
  uncovered.set_all();
  VertexList chosen;
  while (uncovered.any()) {
    std::size_t best_v = n;
    std::size_t best_gain = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const auto gain = inst.distinguishers[v].count_and(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }
    if (best_v == n) throw std::logic_error("instance has a pair no vertex separates");
    chosen.push_back(static_cast<Vertex>(best_v));
    uncovered.and_not(inst.distinguishers[best_v]);
  }
  std::sort(chosen.begin(), chosen.end());

  // Drop redundant vertices, highest index first.
  for (std::size_t i = chosen.size(); i-- > 0;) {
    Bitset covered(inst.pair_count());
    for (std::size_t j = 0; j < chosen.size(); ++j)
      if (j != i) covered |= inst.distinguishers[static_cast<std::size_t>(chosen[j])];
    if (covered.count() == inst.pair_count()) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return chosen;
}

VertexList greedy_upper_bound(const Graph& g, PairMode mode) { return greedy_upper_bound(build_instance(g, mode)); }

SolveResult solve_exact(const ResolutionInstance& inst, const SolverOptions& options) {
  const auto start = Clock::now();
  SolveResult r;
  r.mode = inst.mode;
  if (inst.pair_count() == 0) {
    r.stats.elapsed_ms = ms_since(start);
    return r;
  }
  CoverSearch search(inst, options.node_budget);
  r.basis = search.minimize(greedy_upper_bound(inst));
  r.value = static_cast<int>(r.basis.size());
  r.stats.nodes = search.nodes();
  r.stats.elapsed_ms = ms_since(start);
  return r;
}

SolveResult solve_exact(const Graph& g, PairMode mode, const SolverOptions& options) {
  return solve_exact(build_instance(g, mode), options);
}

BasisEnumeration all_min_bases(const Graph& g, PairMode mode, std::size_t limit, const SolverOptions& options) {
  const auto start = Clock::now();
  const auto inst = build_instance(g, mode);
  BasisEnumeration out;
  if (inst.pair_count() == 0) {
    out.bases.push_back({});
    out.truncated = limit == 0;
    if (limit == 0) out.bases.clear();
    out.stats.elapsed_ms = ms_since(start);
    return out;
  }
  const auto best = solve_exact(inst, options);
  out.value = best.value;
  CoverSearch search(inst, options.node_budget);
  auto found = search.enumerate(best.value, limit);
  std::set<VertexList> unique(found.begin(), found.end());
  out.bases.assign(unique.begin(), unique.end());
  if (out.bases.size() > limit) {
    out.truncated = true;
    out.bases.resize(limit);
  }
  out.stats.nodes = best.stats.nodes + search.nodes();
  out.stats.elapsed_ms = ms_since(start);
  return out;
}

}  // namespace nldim
