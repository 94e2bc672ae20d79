#include "nldim/campaigns.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "nldim/closed_form.hpp"
#include "nldim/embed.hpp"
#include "nldim/enumerate.hpp"
#include "nldim/formats.hpp"
#include "nldim/generators.hpp"
#include "nldim/structure.hpp"

namespace nldim {

std::string_view to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool budget = false;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  void fail(const Graph& g, std::string expected, std::string actual, std::string detail) {
    failures.push_back({emit_graph6(g), std::move(expected), std::move(actual), std::move(detail)});
  }
  void check(bool ok, const Graph& g, std::string expected, std::string actual, std::string detail) {
    if (!ok) fail(g, std::move(expected), std::move(actual), std::move(detail));
  }
};

using InstanceFn = std::function<void(std::size_t, Outcome&)>;

// Evaluates instances 0..count-1, concurrently when requested. Each instance
// writes only its own slot; the report is assembled afterwards in index
// order and failures are sorted, so the result does not depend on scheduling.
VerificationReport run_instances(VerificationReport report, std::size_t count, const InstanceFn& fn,
                                 const CampaignParams& params) {
  const auto start = Clock::now();
  std::vector<Outcome> outcomes(count);
  const long total = static_cast<long>(count);
  const bool parallel = params.execution == Execution::Parallel;
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (long i = 0; i < total; ++i) {
    auto& out = outcomes[static_cast<std::size_t>(i)];
    try {
      fn(static_cast<std::size_t>(i), out);
    } catch (const BudgetExceeded&) {
      out.budget = true;
    } catch (const std::exception& e) {
      out.failures.push_back({"", "no error", e.what(), "instance " + std::to_string(i) + " raised"});
    }
  }
  report.instances = count;
  for (auto& o : outcomes) {
    if (o.budget) ++report.budget_exceeded;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
    for (auto& n : o.notes) report.notes.push_back(std::move(n));
  }
  std::sort(report.failures.begin(), report.failures.end());
  std::sort(report.notes.begin(), report.notes.end());
  report.notes.erase(std::unique(report.notes.begin(), report.notes.end()), report.notes.end());
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

VerificationReport make_report(const std::string& id, std::string statement, const CampaignParams& params, int max_n,
                               int samples) {
  VerificationReport r;
  r.theorem = id;
  r.statement = std::move(statement);
  r.seed = params.seed;
  r.max_n = max_n;
  r.samples = samples;
  return r;
}

std::string str(long long v) { return std::to_string(v); }

std::string list(const VertexList& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_complete_bipartite(const Graph& g) {
  const auto parts = bipartition(g);
  if (!parts) return false;
  return g.edge_count() == parts->first.size() * parts->second.size();
}

bool has_clique_levels(const Graph& g) {
  for (Vertex x = 0; x < g.order(); ++x) {
    bool all = true;
    for (const auto& level : distance_levels(g, x)) {
      for (std::size_t i = 0; i < level.size() && all; ++i)
        for (std::size_t j = i + 1; j < level.size() && all; ++j)
          if (!g.adjacent(level[i], level[j])) all = false;
      if (!all) break;
    }
    if (all) return true;
  }
  return false;
}

// --------------------------------------------------- small-graph checks

struct EnumerationChecks {
  bool eq1 = false, prop21 = false, prop51 = false, prop52 = false;
};

void check_small_graph(const Graph& g, const EnumerationChecks& which, const SolverOptions& opts, Outcome& out) {
  const int n = g.order();
  const int nl = solve_exact(g, PairMode::NonAdjacent, opts).value;
  if (which.eq1) {
    const int full = solve_exact(g, PairMode::All, opts).value;
    out.check(nl <= full, g, "dim_nl <= dim", str(nl) + " > " + str(full), "eq1");
  }
  if (which.prop21 && !is_complete(g)) {
    const bool levels = has_clique_levels(g);
    out.check((nl == 1) == levels, g, levels ? "dim_nl = 1" : "dim_nl != 1", "dim_nl = " + str(nl), "prop21");
  }
  if (which.prop51) {
    const int bound = omega_upper_bound(g);
    out.check(nl <= bound, g, "dim_nl <= n - omega = " + str(bound), str(nl), "prop51");
  }
  if (which.prop52 && n >= 3) {
    const bool kst = is_complete_bipartite(g);
    out.check((nl == n - 2) == kst, g, kst ? "dim_nl = n-2" : "dim_nl != n-2", "dim_nl = " + str(nl), "prop52");
  }
}

std::uint64_t sample_connected_mask(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int slots = pair_slots(n);
  const std::uint64_t full = slots >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << slots) - 1;
  while (true) {
    const std::uint64_t m = rng() & full;
    if (mask_connected(n, m)) return m;
  }
}

VerificationReport small_graph_campaign(const std::string& id, std::string statement, EnumerationChecks which,
                                        const CampaignParams& params) {
  const int max_n = params.max_n.value_or(6);
  const int samples = params.samples.value_or(0);
  if (max_n < 1 || max_n > kMaxEnumerationOrder) throw std::invalid_argument("max-n must lie in 1..8 for " + id);
  if (samples > 0 && max_n + 1 > 11) throw std::invalid_argument("sampling order exceeds 11");

  struct Item {
    int n;
    std::uint64_t mask;
  };
  std::vector<Item> items;
  for (int n = 1; n <= max_n; ++n)
    for (auto m : connected_masks(n)) items.push_back({n, m});
  for (int i = 0; i < samples; ++i)
    items.push_back({max_n + 1, sample_connected_mask(max_n + 1, derive_seed(params.seed, static_cast<std::uint64_t>(i)))});

  auto report = make_report(id, std::move(statement), params, max_n, samples);
  return run_instances(std::move(report), items.size(), [&](std::size_t i, Outcome& out) {
    check_small_graph(graph_from_mask(items[i].n, items[i].mask), which, params.solver, out);
  }, params);
}

// ----------------------------------------------------------- campaigns

VerificationReport campaign_prop22(const CampaignParams& params) {
  const int max_n = params.max_n.value_or(14);
  const int samples = params.samples.value_or(100);
  auto report = make_report("prop22", "bipartite G with n >= 3: dim_nl(G) = dim(G); trees: n1 - ex", params, max_n,
                            samples);
  return run_instances(std::move(report), static_cast<std::size_t>(2 * samples), [&](std::size_t i, Outcome& out) {
    std::mt19937_64 rng(derive_seed(params.seed, i));
    const int n = uniform_int(rng, 3, max_n);
    const bool tree = i < static_cast<std::size_t>(samples);
    const Graph g = tree ? random_tree(n, rng()) : random_bipartite_connected(n, 0.3, rng());
    const int nl = solve_exact(g, PairMode::NonAdjacent, params.solver).value;
    const int full = solve_exact(g, PairMode::All, params.solver).value;
    out.check(nl == full, g, "dim_nl = dim", str(nl) + " vs " + str(full), "bipartite equality");
    if (tree && g.max_degree() >= 3) {
      const auto stats = tree_stats(g);
      const int formula = stats.leaf_count() - stats.exterior_count();
      out.check(nl == formula, g, "n1 - ex = " + str(formula), str(nl), "tree formula");
    }
  }, params);
}

Graph random_block_graph_up_to(int max_n, std::mt19937_64& rng) {
  std::vector<int> sizes;
  int n = 0;
  while (true) {
    const int s = uniform_int(rng, 2, 5);
    const int grow = sizes.empty() ? s : s - 1;
    if (n + grow > max_n) break;
    sizes.push_back(s);
    n += grow;
    if (n >= 3 && uniform_int(rng, 0, 9) == 0) break;
  }
  if (n < 3) sizes = {3};
  return random_block_graph(sizes, rng());
}

VerificationReport campaign_thm31(const CampaignParams& params) {
  const int max_n = params.max_n.value_or(14);
  const int samples = params.samples.value_or(100);
  auto report = make_report("thm31", "block graph G with n >= 3: dim_nl(G) = dim(block-cutpoint tree)", params,
                            max_n, samples);
  return run_instances(std::move(report), static_cast<std::size_t>(samples), [&](std::size_t i, Outcome& out) {
    std::mt19937_64 rng(derive_seed(params.seed, i));
    const Graph g = random_block_graph_up_to(max_n, rng);
    const auto formula = dimnl_block_graph(g);
    const auto solved = solve_exact(g, PairMode::NonAdjacent, params.solver);
    out.check(formula.value == solved.value, g, str(formula.value), str(solved.value), "closed form vs solver");
    const auto& w = *formula.witness;
    out.check(static_cast<int>(w.size()) == formula.value, g, "witness size " + str(formula.value), str(static_cast<long long>(w.size())),
              "witness size");
    out.check(is_resolving(g, w, PairMode::NonAdjacent), g, "witness resolves", list(w), "witness validity");
  }, params);
}

Graph random_noncomplete(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  while (true) {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) es.emplace_back(u, v);
    Graph h(n, es);
    if (!is_complete(h)) return h;
  }
}

VerificationReport campaign_thm32(const CampaignParams& params) {
  const int max_n = params.max_n.value_or(5);
  const int samples = params.samples.value_or(50);
  auto report = make_report("thm32", "H non-complete: dim_nl(G corona H) = n(G) * dim_nl(H + K_1)", params, max_n,
                            samples);
  return run_instances(std::move(report), static_cast<std::size_t>(samples), [&](std::size_t i, Outcome& out) {
    std::mt19937_64 rng(derive_seed(params.seed, i));
    const Graph g = random_connected(uniform_int(rng, 1, max_n), 0.4, rng());
    const Graph h = random_noncomplete(uniform_int(rng, 2, std::max(2, max_n - 1)), rng);
    const Graph product = corona(g, h);
    const int formula = dimnl_corona(g, h, params.solver);
    const int solved = solve_exact(product, PairMode::NonAdjacent, params.solver).value;
    out.check(formula == solved, product, str(formula), str(solved), "corona with H = " + emit_graph6(h));
  }, params);
}

VerificationReport campaign_thm33(const CampaignParams& params) {
  const int max_n = params.max_n.value_or(5);
  const int samples = params.samples.value_or(30);
  auto report = make_report("thm33", "dim(G) <= dim_nl(G corona K_n) <= n(G), with sharpness families", params,
                            max_n, samples);

  struct Family {
    Graph g;
    int n;
    int expected;
    std::string name;
  };
  std::vector<Family> families;
  families.push_back({complete_bipartite(3, 3), 2, 4, "K_{3,3} corona K_2 meets the lower bound"});
  families.push_back({path(2), 1, 2, "P_2 corona K_1 meets the upper bound"});
  for (int m = 3; m <= 5; ++m) families.push_back({path(m), 2, 2, "P_" + str(m) + " corona K_2 lies strictly inside"});

  const std::size_t fixed = families.size();
  return run_instances(std::move(report), fixed + static_cast<std::size_t>(samples), [&](std::size_t i, Outcome& out) {
    Graph g;
    int n = 0;
    if (i < fixed) {
      g = families[i].g;
      n = families[i].n;
    } else {
      std::mt19937_64 rng(derive_seed(params.seed, i));
      g = random_connected(uniform_int(rng, 2, max_n), 0.4, rng());
      n = uniform_int(rng, 1, 3);
    }
    const Graph product = corona(g, complete(n));
    const int value = solve_exact(product, PairMode::NonAdjacent, params.solver).value;
    const auto [lower, upper] = corona_complete_bounds(g, n, params.solver);
    out.check(lower <= value && value <= upper, product, "[" + str(lower) + ", " + str(upper) + "]", str(value),
              "bounds, n = " + str(n));
    if (i < fixed) {
      const auto& f = families[i];
      out.check(value == f.expected, product, str(f.expected), str(value), f.name);
    }
  }, params);
}

VerificationReport campaign_thm41(const CampaignParams& params) {
  const int max_n = params.max_n.value_or(30);
  const int companion_max = std::min(max_n, 20);
  const int gap_enumeration_max = std::min(max_n, 12);
  auto report = make_report("thm41", "n >= 7: dim_nl(W_{1,n}) = floor(2n/5)", params, max_n, 0);
  if (max_n < 3) return report;
  return run_instances(std::move(report), static_cast<std::size_t>(max_n - 2), [&](std::size_t i, Outcome& out) {
    const int n = static_cast<int>(i) + 3;
    const Graph w = wheel(n);
    const int nl = solve_exact(w, PairMode::NonAdjacent, params.solver).value;
    out.check(nl == dimnl_wheel(n), w, str(dimnl_wheel(n)), str(nl), "dim_nl, n = " + str(n));
    if (n <= companion_max) {
      const int full = solve_exact(w, PairMode::All, params.solver).value;
      const int local = solve_exact(w, PairMode::Adjacent, params.solver).value;
      out.check(full == dim_wheel(n), w, str(dim_wheel(n)), str(full), "dim, n = " + str(n));
      out.check(local == dimlocal_wheel(n), w, str(dimlocal_wheel(n)), str(local), "dim_l, n = " + str(n));
    }
    if (n < 7) return;

    const auto basis = wheel_basis(n);
    out.check(static_cast<int>(basis.size()) == 2 * n / 5, w, str(2 * n / 5), str(static_cast<long long>(basis.size())),
              "construction size, n = " + str(n));
    const auto gaps = wheel_gap_check(n, basis);
    out.check(gaps.conditions_hold(), w, "gap conditions hold", list(basis), "construction gaps, n = " + str(n));
    out.check(gaps.resolving, w, "construction resolves", list(basis), "construction, n = " + str(n));

    if (n > gap_enumeration_max) return;
    // Every basis obeys the gap conditions; after removing a size-3 gap it
    // still resolves and respects the counting bound.
    const auto all = all_min_bases(w, PairMode::NonAdjacent, 100000, params.solver);
    for (const auto& b : all.bases) {
      const auto rep = wheel_gap_check(n, b);
      out.check(rep.conditions_hold(), w, "basis obeys gap conditions", list(b), "basis gaps, n = " + str(n));
      const auto normalized = remove_size_three_gap(n, b);
      const auto nrep = wheel_gap_check(n, normalized);
      const bool no_three = std::none_of(nrep.profile.gaps.begin(), nrep.profile.gaps.end(),
                                         [](const WheelGap& g) { return g.size == 3; });
      out.check(nrep.resolving && nrep.conditions_hold() && no_three && normalized.size() == b.size(), w,
                "normalized basis without size-3 gap", list(normalized), "gap normalization of " + list(b));
      const int k = static_cast<int>(b.size());
      out.check(n <= k + wheel_gap_capacity(k), w, "n <= |X| + gap capacity", str(k) + " + " + str(wheel_gap_capacity(k)),
                "counting bound, n = " + str(n));
    }
  }, params);
}

VerificationReport campaign_thm53(const CampaignParams& params) {
  const int max_n = params.max_n.value_or(20);
  const int samples = params.samples.value_or(100);
  const int girth_samples = std::max(1, samples / 2);
  auto report = make_report("thm53", "girth >= 7: dim_nl(G) <= beta'(G) - 1; trees: equality iff subdivided star",
                            params, max_n, samples);

  // Subdivided stars K_{1,m}, 3 <= m <= 6, with j of the m edges subdivided once, j < m.
  std::vector<Graph> members;
  for (int m = 3; m <= 6; ++m)
    for (int j = 0; j < m; ++j) {
      std::vector<int> legs(static_cast<std::size_t>(m), 1);
      for (int t = 0; t < j; ++t) legs[static_cast<std::size_t>(t)] = 2;
      if (m + 1 + j <= max_n) members.push_back(spider(legs));
    }
  // Paths are reported separately and asserted only for the bound.
  std::vector<Graph> paths;
  for (int n = 2; n <= std::min(max_n, 8); ++n) paths.push_back(path(n));
  std::vector<Graph> exploratory;
  if (params.exploratory) {
    exploratory.push_back(petersen());
    exploratory.push_back(cycle(5));
    exploratory.push_back(cycle(6));
    exploratory.push_back(subdivide(complete(4), 1));
  }

  const std::size_t n_random = static_cast<std::size_t>(samples);
  const std::size_t n_girth = static_cast<std::size_t>(girth_samples);
  const std::size_t total = members.size() + paths.size() + n_random + n_girth + exploratory.size();
  return run_instances(std::move(report), total, [&](std::size_t i, Outcome& out) {
    Graph g;
    enum { Member, Path, RandomTree, Girth, Exploratory } kind;
    std::mt19937_64 rng(derive_seed(params.seed, i));
    if (i < members.size()) {
      g = members[i];
      kind = Member;
    } else if ((i -= members.size()) < paths.size()) {
      g = paths[i];
      kind = Path;
    } else if ((i -= paths.size()) < n_random) {
      g = random_tree(uniform_int(rng, 3, max_n), rng());
      kind = RandomTree;
    } else if ((i -= n_random) < n_girth) {
      // Base graph with a cycle; subdividing every edge t times multiplies
      // each cycle length by t + 1.
      while (true) {
        const Graph base = random_connected(uniform_int(rng, 3, 6), 0.35, rng());
        const auto bg = girth(base);
        if (!bg) continue;
        const int times = (7 + *bg - 1) / *bg - 1;
        g = subdivide(base, times);
        if (g.order() <= max_n) break;
      }
      kind = Girth;
    } else {
      g = exploratory[i - n_girth];
      kind = Exploratory;
    }

    const int nl = solve_exact(g, PairMode::NonAdjacent, params.solver).value;
    if (kind == Exploratory) {
      const int beta = edge_cover_number(g) - 1;
      out.notes.push_back("exploratory girth " + str(girth(g).value_or(0)) + " graph " + emit_graph6(g) + ": dim_nl = " +
                          str(nl) + ", beta' - 1 = " + str(beta));
      return;
    }
    const auto bound = beta_prime_upper_bound(g);
    if (!bound.value) {
      out.fail(g, "bound applies", bound.reason, "beta' bound precondition");
      return;
    }
    out.check(nl <= *bound.value, g, "dim_nl <= " + str(*bound.value), str(nl), "beta' bound");
    const bool equal = nl == *bound.value;
    if (kind == Path) {
      if (equal) out.notes.push_back("path P_" + str(g.order()) + " attains dim_nl = beta' - 1");
      return;
    }
    if (is_tree(g) && g.max_degree() >= 3) {
      const bool member = is_subdivided_star(g);
      out.check(equal == member, g, member ? "equality" : "strict inequality",
                "dim_nl = " + str(nl) + ", beta' - 1 = " + str(*bound.value), "tree equality characterization");
    }
  }, params);
}

VerificationReport campaign_thm61(const CampaignParams& params) {
  const int max_n = params.max_n.value_or(12);
  const int samples = params.samples.value_or(200);
  auto report = make_report("thm61", "G induced in H with dim_nl(H) <= ceil(log2 chi(complement G)), diam(H) <= 4",
                            params, max_n, samples);
  return run_instances(std::move(report), static_cast<std::size_t>(samples) + 1, [&](std::size_t i, Outcome& out) {
    Graph g;
    if (i == 0) {
      g = petersen();
    } else {
      std::mt19937_64 rng(derive_seed(params.seed, i));
      const int n = uniform_int(rng, 2, max_n);
      const double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
      g = random_connected(n, p, rng());
    }
    const auto emb = embed_supergraph(g);
    const auto rep = verify_embedding(g, emb, 40, params.solver);
    for (const auto& v : rep.violations) out.fail(g, "construction invariant", v, "embedding");
    if (i == 0) {
      out.check(emb.s == 5, g, "chi = 5", str(emb.s), "Petersen clique cover");
      out.check(emb.host.order() == 13, g, "n(H) = 13", str(emb.host.order()), "Petersen host order");
    }
  }, params);
}

}  // namespace

std::vector<std::string> campaign_ids() {
  return {"eq1", "prop21", "prop22", "thm31", "thm32", "thm33", "thm41", "prop51", "prop52", "thm53", "thm61"};
}

VerificationReport verify(const std::string& theorem, const CampaignParams& params) {
  if (theorem == "eq1") return small_graph_campaign(theorem, "dim_nl(G) <= dim(G)", {.eq1 = true}, params);
  if (theorem == "prop21")
    return small_graph_campaign(theorem, "G non-complete: dim_nl(G) = 1 iff some vertex has only clique distance levels",
                                {.prop21 = true}, params);
  if (theorem == "prop51") return small_graph_campaign(theorem, "dim_nl(G) <= n(G) - omega(G)", {.prop51 = true}, params);
  if (theorem == "prop52")
    return small_graph_campaign(theorem, "n >= 3: dim_nl(G) = n(G) - 2 iff G = K_{s,t}, t >= 2", {.prop52 = true},
                                params);
  if (theorem == "prop22") return campaign_prop22(params);
  if (theorem == "thm31") return campaign_thm31(params);
  if (theorem == "thm32") return campaign_thm32(params);
  if (theorem == "thm33") return campaign_thm33(params);
  if (theorem == "thm41") return campaign_thm41(params);
  if (theorem == "thm53") return campaign_thm53(params);
  if (theorem == "thm61") return campaign_thm61(params);
  throw std::invalid_argument("unknown theorem id '" + theorem + "'");
}

VerificationReport check_enumeration(int n, const std::vector<std::string>& checks, bool canonical,
                                     const CampaignParams& params) {
  EnumerationChecks which;
  std::string label;
  for (const auto& c : checks) {
    if (c == "eq1") which.eq1 = true;
    else if (c == "prop21") which.prop21 = true;
    else if (c == "prop51") which.prop51 = true;
    else if (c == "prop52") which.prop52 = true;
    else throw std::invalid_argument("unknown enumeration check '" + c + "'");
    label += (label.empty() ? "" : ",") + c;
  }
  std::vector<Graph> graphs;
  enumerate_connected(n, canonical, [&](const Graph& g) {
    graphs.push_back(g);
    return true;
  });
  auto report = make_report(label, "exhaustive connected graphs of order " + str(n) + (canonical ? " up to isomorphism" : ""),
                            params, n, 0);
  return run_instances(std::move(report), graphs.size(), [&](std::size_t i, Outcome& out) {
    check_small_graph(graphs[i], which, params.solver, out);
  }, params);
}

}  // namespace nldim
