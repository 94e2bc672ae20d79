#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nldim/campaigns.hpp"
#include "nldim/closed_form.hpp"
#include "nldim/embed.hpp"
#include "nldim/enumerate.hpp"
#include "nldim/formats.hpp"
#include "nldim/generators.hpp"
#include "nldim/report.hpp"
#include "nldim/solver.hpp"
#include "nldim/structure.hpp"

namespace {

using namespace nldim;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_list(const VertexList& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string invariant_name(PairMode mode) {
  switch (mode) {
    case PairMode::All: return "dim";
    case PairMode::NonAdjacent: return "dim_nl";
    case PairMode::Adjacent: return "dim_l";
  }
  return "?";
}

void emit(const ComputeRecord& r, bool json, bool show_basis) {
  if (json) {
    std::cout << to_json(r).dump() << "\n";
    return;
  }
  std::cout << r.invariant << " = " << r.value << "\n";
  if (show_basis) std::cout << "basis " << format_list(r.basis) << "\n";
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ------------------------------------------------------------ compute

struct ComputeArgs {
  std::string input;
  std::string format = "graph6";
  std::string mode = "nonlocal";
  bool certificate = false;
  int all_bases = 0;
  bool json = false;
};

int run_compute(const ComputeArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = parse_graph(read_input(a.input), parse_format(a.format));
  const PairMode mode = parse_pair_mode(a.mode);
  const auto opts = SolverOptions::from_environment();
  const auto result = solve_exact(g, mode, opts);
  ComputeRecord rec{invariant_name(mode), result.value, result.basis, {}, 0.0};
  if (a.certificate) {
    if (!is_resolving(g, result.basis, mode)) throw std::logic_error("solver certificate does not resolve");
    if (a.json) {
      rec.elapsed_ms = since(t0);
      auto j = to_json(rec);
      j["certificate"] = {{"verified", true}, {"representations", nlohmann::json::array()}};
      for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<int> rep;
        for (Vertex x : result.basis) rep.push_back(g.distance(v, x));
        j["certificate"]["representations"].push_back(rep);
      }
      if (a.all_bases == 0) {
        std::cout << j.dump() << "\n";
        return kOk;
      }
    }
  }
  if (a.all_bases > 0) {
    const auto all = all_min_bases(g, mode, static_cast<std::size_t>(a.all_bases), opts);
    rec.elapsed_ms = since(t0);
    if (a.json) {
      auto j = to_json(rec);
      j["all_bases"] = all.bases;
      j["truncated"] = all.truncated;
      std::cout << j.dump() << "\n";
    } else {
      emit(rec, false, true);
      std::cout << all.bases.size() << " minimum bases" << (all.truncated ? " (truncated)" : "") << "\n";
      for (const auto& b : all.bases) std::cout << "  " << format_list(b) << "\n";
    }
    return kOk;
  }
  rec.elapsed_ms = since(t0);
  if (a.json) {
    std::cout << to_json(rec).dump() << "\n";
    return kOk;
  }
  emit(rec, false, true);
  if (a.certificate) {
    std::cout << "certificate verified; representations:\n";
    for (Vertex v = 0; v < g.order(); ++v) {
      std::cout << "  " << v << ": (";
      for (std::size_t i = 0; i < result.basis.size(); ++i)
        std::cout << (i ? "," : "") << g.distance(v, result.basis[i]);
      std::cout << ")\n";
    }
  }
  return kOk;
}

// ------------------------------------------------------------- family

struct FamilyArgs {
  std::string name;
  std::vector<long long> params;
  double probability = 0.3;
  std::string mode = "nonlocal";
  bool basis = false;
  bool json = false;
};

int run_family(const FamilyArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = generate({a.name, a.params, a.probability});
  const PairMode mode = parse_pair_mode(a.mode);
  ComputeRecord rec{invariant_name(mode), 0, {}, {}, 0.0};

  // Families with a closed form report the formula's value and construction,
  // cross-checked against the solver.
  std::optional<std::pair<int, VertexList>> formula;
  if (mode == PairMode::NonAdjacent && a.name == "wheel" && g.order() - 1 >= 7) {
    const int n = g.order() - 1;
    formula = std::make_pair(dimnl_wheel(n), wheel_basis(n));
    rec.theorem_refs = {"thm41"};
  } else if (mode == PairMode::NonAdjacent && g.order() >= 3 && is_block_graph(g)) {
    const auto f = dimnl_block_graph(g);
    formula = std::make_pair(f.value, f.witness.value_or(VertexList{}));
    rec.theorem_refs = {"thm31"};
  }
  const auto solved = solve_exact(g, mode, SolverOptions::from_environment());
  if (formula) {
    if (formula->first != solved.value || !is_resolving(g, formula->second, mode))
      throw std::logic_error("closed form disagrees with the solver");
    rec.value = formula->first;
    rec.basis = formula->second;
  } else {
    rec.value = solved.value;
    rec.basis = solved.basis;
  }
  rec.elapsed_ms = since(t0);
  if (!a.json) std::cout << a.name << ": n = " << g.order() << ", m = " << g.edge_count() << "\n";
  emit(rec, a.json, a.basis);
  return kOk;
}

// ------------------------------------------------------------- verify

struct VerifyArgs {
  std::string id;
  std::optional<int> max_n;
  std::optional<int> samples;
  std::uint64_t seed = 1;
  bool serial = false;
  bool exploratory = false;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  CampaignParams p;
  p.max_n = a.max_n;
  p.samples = a.samples;
  p.seed = a.seed;
  p.execution = a.serial ? Execution::Serial : Execution::Parallel;
  p.exploratory = a.exploratory;
  const auto report = verify(a.id, p);
  if (a.json) std::cout << to_json(report).dump(2) << "\n";
  else std::cout << to_text(report);
  return report.status() == ReportStatus::Fail ? kFailed : kOk;
}

// -------------------------------------------------------------- embed

struct EmbedArgs {
  std::string input;
  std::string format = "graph6";
  bool solve = false;
  bool json = false;
};

int run_embed(const EmbedArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = parse_graph(read_input(a.input), parse_format(a.format));
  const auto emb = embed_supergraph(g);
  const auto rep = verify_embedding(g, emb, a.solve ? kMaxOrder : 0, SolverOptions::from_environment());
  if (a.json) {
    ComputeRecord rec{"dim_nl_host_upper_bound", emb.k, emb.anchor, {"thm61"}, since(t0)};
    auto j = to_json(rec);
    j["host_graph6"] = emit_graph6(emb.host);
    j["host_order"] = emb.host.order();
    j["chi_complement"] = emb.s;
    j["classes"] = emb.classes;
    j["diameter"] = rep.diameter;
    j["anchor_resolving"] = rep.anchor_resolving;
    j["induced"] = rep.induced;
    j["s_below_power_of_two"] = rep.below_power_of_two;
    j["statement_range"] = rep.statement_range;
    if (rep.solved_dimension) j["solved_dim_nl"] = *rep.solved_dimension;
    j["violations"] = rep.violations;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "chi(complement) = " << emb.s << ", k = " << emb.k << ", n(H) = " << emb.host.order()
              << ", diam(H) = " << rep.diameter << "\n";
    std::cout << "anchor " << format_list(emb.anchor) << (rep.anchor_resolving ? " resolves" : " does NOT resolve")
              << " the non-adjacent pairs of H\n";
    if (rep.solved_dimension) std::cout << "dim_nl(H) = " << *rep.solved_dimension << "\n";
    std::cout << "H (graph6): " << emit_graph6(emb.host) << "\n";
    for (const auto& v : rep.violations) std::cout << "VIOLATION: " << v << "\n";
  }
  return rep.passed() ? kOk : kFailed;
}

// ---------------------------------------------------------- enumerate

struct EnumerateArgs {
  int n = 0;
  bool canonical = false;
  std::vector<std::string> checks;
  bool serial = false;
  bool json = false;
};

int run_enumerate(const EnumerateArgs& a) {
  if (a.checks.empty()) {
    std::size_t count = 0;
    enumerate_connected(a.n, a.canonical, [&](const Graph& g) {
      if (!a.json) std::cout << emit_graph6(g) << "\n";
      ++count;
      return true;
    });
    if (a.json) std::cout << nlohmann::json{{"schema", kReportSchema}, {"n", a.n}, {"canonical", a.canonical}, {"count", count}}.dump() << "\n";
    else std::cerr << count << " graphs\n";
    return kOk;
  }
  CampaignParams p;
  p.execution = a.serial ? Execution::Serial : Execution::Parallel;
  const auto report = check_enumeration(a.n, a.checks, a.canonical, p);
  if (a.json) std::cout << to_json(report).dump(2) << "\n";
  else std::cout << to_text(report);
  return report.status() == ReportStatus::Fail ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact nonlocal metric dimension toolkit"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Exact dim_nl, dim_l or dim of an input graph");
  c->add_option("--input", compute.input, "Graph file, or - for stdin")->required();
  c->add_option("--format", compute.format, "graph6 | edgelist")->check(CLI::IsMember({"graph6", "g6", "edgelist", "edges"}));
  c->add_option("--mode", compute.mode, "nonlocal | local | full")->check(CLI::IsMember({"nonlocal", "local", "full"}));
  c->add_flag("--certificate", compute.certificate, "Verify the basis and print metric representations");
  c->add_option("--all-bases", compute.all_bases, "List up to LIMIT minimum bases")->check(CLI::PositiveNumber);
  c->add_flag("--json", compute.json);

  FamilyArgs family;
  auto* f = app.add_subcommand("family", "Invariant of a named graph family");
  f->add_option("name", family.name, "Family name")->required()->check(CLI::IsMember(family_names()));
  f->add_option("params", family.params, "Integer parameters");
  f->add_option("--probability", family.probability, "Edge probability for random_connected");
  f->add_option("--mode", family.mode)->check(CLI::IsMember({"nonlocal", "local", "full"}));
  f->add_flag("--basis", family.basis, "Print the basis");
  f->add_flag("--json", family.json);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run a verification campaign");
  v->add_option("id", ver.id, "Campaign id")->required()->check(CLI::IsMember(campaign_ids()));
  v->add_option("--max-n", ver.max_n);
  v->add_option("--seed", ver.seed);
  v->add_option("--samples", ver.samples);
  v->add_flag("--serial", ver.serial, "Evaluate instances on one thread");
  v->add_flag("--exploratory", ver.exploratory, "Add unasserted observations");
  v->add_flag("--json", ver.json);

  EmbedArgs emb;
  auto* e = app.add_subcommand("embed", "Build and check the supergraph embedding");
  e->add_option("--input", emb.input)->required();
  e->add_option("--format", emb.format)->check(CLI::IsMember({"graph6", "g6", "edgelist", "edges"}));
  e->add_flag("--solve", emb.solve, "Solve dim_nl(H) exactly");
  e->add_flag("--json", emb.json);

  EnumerateArgs en;
  auto* n = app.add_subcommand("enumerate", "Enumerate connected graphs, optionally checking properties");
  n->add_option("--n", en.n)->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  n->add_flag("--canonical", en.canonical, "One graph per isomorphism class");
  n->add_option("--check", en.checks, "eq1,prop21,prop51,prop52")->delimiter(',')
      ->check(CLI::IsMember({"eq1", "prop21", "prop51", "prop52"}));
  n->add_flag("--serial", en.serial);
  n->add_flag("--json", en.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c) return run_compute(compute);
    if (*f) return run_family(family);
    if (*v) return run_verify(ver);
    if (*e) return run_embed(emb);
    if (*n) return run_enumerate(en);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const FormatError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::length_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kFailed;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
