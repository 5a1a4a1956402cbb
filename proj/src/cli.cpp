#include "gham/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gham/conditions.hpp"
#include "gham/estimate.hpp"
#include "gham/io.hpp"
#include "gham/presets.hpp"

namespace gham {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kInfeasible = 3;

struct SourceOpts {
  std::string preset;
  std::string input;
};

void add_source_options(CLI::App* sc, SourceOpts& src) {
  auto* p = sc->add_option("--preset", src.preset, "built-in graphon name (see 'presets')");
  auto* i = sc->add_option("--input", src.input, "graphon JSON file");
  p->excludes(i);
}

// fills w; returns -1 on success, else the exit code to use
int load_source(const SourceOpts& src, StepGraphon& w, std::ostream& err) {
  if (src.preset.empty() == src.input.empty()) {
    err << "error: give exactly one of --preset or --input\n";
    return kUsage;
  }
  if (!src.preset.empty()) {
    try {
      w = preset_graphon(src.preset);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  } else {
    try {
      w = read_graphon_file(src.input);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kParse;
    }
  }
  return -1;
}

int write_text(const std::string& path, const std::string& text, std::ostream& out,
               std::ostream& err) {
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(path);
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return kParse;
  }
  f << text;
  return kOk;
}

std::string join_fractions(const std::vector<Rational>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += format_rational(xs[i]);
  }
  return s;
}

std::string join_cycle(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

void print_report(const ConditionReport& r, std::ostream& out) {
  out << "blocks               " << r.concentration.size() << "\n";
  out << "concentration        " << join_fractions(r.concentration) << "\n";
  if (r.degenerate_zero) out << "zero graphon         yes (no edges are ever sampled)\n";
  if (r.single_block)
    out << "single block         yes (counts as strongly connected)\n";
  out << "strongly connected   " << (r.condC ? "yes" : "no");
  if (!r.condC) {
    out << "  components:";
    for (const auto& comp : r.sccs) out << ' ' << join_cycle(comp);
  }
  out << "\n";
  out << "cycles (" << r.cycles.size() << ")          ";
  for (const auto& c : r.cycles.cycles) out << ' ' << join_cycle(c);
  out << "\n";
  out << "corank               " << r.corank << "\n";
  out << "full cycle rank      " << (r.condA ? "yes" : "no") << "\n";
  out << "cone member          " << (r.condBprime ? "yes" : "no");
  if (r.cone_certificate)
    out << "   certificate " << join_fractions(r.cone_certificate->coefficients);
  out << "\n";
  out << "interior member      " << (r.condB ? "yes" : "no");
  if (r.interior_certificate)
    out << "   certificate " << join_fractions(r.interior_certificate->coefficients);
  out << "\n";
  out << "limit, decomposition " << verdict_name(r.verdict_H) << "\n";
  out << "limit, cycle         " << verdict_name(r.verdict_strongH) << "\n";
}

struct AnalyzeOpts {
  SourceOpts src;
  std::size_t max_cycles = kDefaultCycleCap;
  bool json = false;
};

int cmd_analyze(const AnalyzeOpts& o, std::ostream& out, std::ostream& err) {
  StepGraphon w;
  if (int rc = load_source(o.src, w, err); rc >= 0) return rc;
  ConditionReport rep;
  try {
    rep = check_conditions(w, o.max_cycles);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (o.json)
    out << report_to_json(rep) << "\n";
  else
    print_report(rep, out);
  return kOk;
}

struct EstimateOpts {
  SourceOpts src;
  std::vector<int> n_values;
  int trials = 2000;
  std::uint64_t seed = 42;
  int workers = 1;
  std::string mode = "decomposition";
  std::uint64_t budget = kDefaultCycleSearchBudget;
  bool allow_large = false;
  std::string output;
};

int cmd_estimate(const EstimateOpts& o, std::ostream& out, std::ostream& err) {
  StepGraphon w;
  if (int rc = load_source(o.src, w, err); rc >= 0) return rc;
  if (o.mode == "cycle" && !o.allow_large)
    for (int n : o.n_values)
      if (n > 60) {
        err << "error: n=" << n
            << " is past the exact-search comfort zone for --mode cycle;"
               " pass --allow-large to run anyway\n";
        return kUsage;
      }

  EstimateConfig cfg;
  cfg.graphon = std::move(w);
  cfg.n_values = o.n_values;
  cfg.trials = o.trials;
  cfg.master_seed = o.seed;
  cfg.workers = o.workers;
  cfg.mode = o.mode == "cycle" ? EstimateMode::Cycle : EstimateMode::Decomposition;
  cfg.cycle_budget = o.budget;

  std::vector<EstimateRow> rows;
  try {
    rows = run_estimate(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return write_text(o.output, rows_to_csv(rows), out, err);
}

struct ConstructOpts {
  SourceOpts src;
  std::vector<long long> y;
  std::string kind = "cycle";
  std::size_t max_cycles = kDefaultCycleCap;
  std::string output;
  std::string edges;
};

// Distributes each original block's node count over the blocks that replaced
// it in the loop-free reduction, trying compositions in lexicographic order
// until `feasible` accepts one. Returns 1 found, 0 none, 2 budget exhausted.
int search_split(const std::vector<std::vector<int>>& groups, const std::vector<long long>& y,
                 const std::vector<long long>& min_need,
                 const std::function<bool(const std::vector<long long>&)>& feasible,
                 long long budget, std::vector<long long>& found) {
  std::size_t reduced_m = min_need.size();
  std::vector<long long> cur(reduced_m, 0);
  bool exhausted = false;

  std::function<bool(std::size_t)> over_blocks = [&](std::size_t b) -> bool {
    if (b == groups.size()) {
      if (budget-- <= 0) {
        exhausted = true;
        return false;
      }
      if (!feasible(cur)) return false;
      found = cur;
      return true;
    }
    const auto& g = groups[b];
    std::function<bool(std::size_t, long long)> over_members = [&](std::size_t gi,
                                                                   long long left) -> bool {
      if (exhausted) return false;
      int j = g[gi];
      if (gi + 1 == g.size()) {
        if (left < min_need[j]) return false;
        cur[j] = left;
        return over_blocks(b + 1);
      }
      long long tail_min = 0;
      for (std::size_t t = gi + 1; t < g.size(); ++t) tail_min += min_need[g[t]];
      for (long long v = min_need[j]; v + tail_min <= left; ++v) {
        cur[j] = v;
        if (over_members(gi + 1, left - v)) return true;
        if (exhausted) return false;
      }
      return false;
    };
    return over_members(0, y[b]);
  };

  if (over_blocks(0)) return 1;
  return exhausted ? 2 : 0;
}

int cmd_construct(const ConstructOpts& o, std::ostream& out, std::ostream& err) {
  StepGraphon w;
  if (int rc = load_source(o.src, w, err); rc >= 0) return rc;
  if (static_cast<int>(o.y.size()) != w.block_count()) {
    err << "error: --y needs " << w.block_count() << " entries, got " << o.y.size() << "\n";
    return kUsage;
  }
  for (long long v : o.y)
    if (v < 0) {
      err << "error: --y entries must be nonnegative\n";
      return kUsage;
    }

  StepGraphon reduced = loop_free_reduction(w);
  SkeletonGraph s = skeleton_of(reduced);

  // original block of each reduced block (the reduction only splits)
  std::vector<int> origin(reduced.block_count());
  std::vector<std::vector<int>> groups(w.block_count());
  for (int j = 0; j < reduced.block_count(); ++j) {
    origin[j] = w.block_of_point(reduced.partition[j]);
    groups[origin[j]].push_back(j);
  }

  const bool want_cycle = o.kind == "cycle";
  std::vector<long long> min_need(s.m, 0);
  if (want_cycle) {
    if (!is_strongly_connected(s)) {
      err << "error: the skeleton is not strongly connected, so no spanning cycle exists\n";
      return kInfeasible;
    }
    CycleSet cycles;
    try {
      cycles = enumerate_cycles(s, o.max_cycles);
    } catch (const std::runtime_error& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    if (cycles.size() == 0) {
      err << "error: the skeleton has no cycle\n";
      return kInfeasible;
    }
    for (const auto& c : cycles.cycles)
      for (int v : c) ++min_need[v];
  }

  auto feasible = [&](const std::vector<long long>& cand) -> bool {
    if (want_cycle) {
      std::vector<long long> rest(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) rest[i] = cand[i] - min_need[i];
      return integer_flow(s, rest).has_value();
    }
    return integer_flow(s, cand).has_value();
  };

  std::vector<long long> y_reduced;
  int sr = search_split(groups, o.y, min_need, feasible, 200000, y_reduced);
  if (sr == 2) {
    err << "error: gave up searching node-count splits after 200000 candidates\n";
    return kInfeasible;
  }
  if (sr == 0) {
    err << "error: no split of the node counts over the reduced blocks is realizable\n";
    return kInfeasible;
  }

  HamWitness h = want_cycle ? build_ham_cycle_Ky(s, y_reduced)
                            : build_ham_decomposition_Ky(s, y_reduced);
  SampledDigraph k = build_complete_partite(s, y_reduced);
  if (!verify_witness(k, h)) throw std::logic_error("constructed witness failed verification");

  nlohmann::json j;
  j["kind"] = o.kind;
  j["n"] = k.n;
  j["reduced_blocks"] = s.m;
  j["reduced_y"] = y_reduced;
  j["original_block"] = origin;
  j["node_block"] = k.block_of;
  j["cycles"] = h.cycles;
  int rc = write_text(o.output, j.dump(2) + "\n", out, err);
  if (rc != kOk) return rc;
  if (!o.edges.empty()) return write_text(o.edges, digraph_to_edge_list(k), out, err);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact analysis, Monte Carlo estimation, and witness construction "
               "for Hamiltonicity of dense random digraphs drawn from step graphons"};
  app.require_subcommand(1);

  auto* sc_presets = app.add_subcommand("presets", "list built-in graphons");

  AnalyzeOpts ao;
  auto* sc_analyze = app.add_subcommand("analyze", "exact structural analysis of a graphon");
  add_source_options(sc_analyze, ao.src);
  sc_analyze->add_option("--max-cycles", ao.max_cycles, "abort past this many skeleton cycles");
  sc_analyze->add_flag("--json", ao.json, "machine readable output");

  EstimateOpts eo;
  auto* sc_estimate =
      app.add_subcommand("estimate", "Monte Carlo success frequencies over sampled digraphs");
  add_source_options(sc_estimate, eo.src);
  sc_estimate->add_option("--n", eo.n_values, "graph sizes, comma separated")
      ->required()
      ->delimiter(',');
  sc_estimate->add_option("--trials", eo.trials, "trials per size (default 2000)");
  sc_estimate->add_option("--seed", eo.seed, "master seed (default 42)");
  sc_estimate->add_option("--workers", eo.workers, "worker threads (default 1)");
  sc_estimate->add_option("--mode", eo.mode, "decomposition | cycle")
      ->check(CLI::IsMember({"decomposition", "cycle"}));
  sc_estimate->add_option("--budget", eo.budget, "node expansion budget for --mode cycle");
  sc_estimate->add_flag("--allow-large", eo.allow_large, "lift the n <= 60 guard in cycle mode");
  sc_estimate->add_option("-o,--output", eo.output, "write CSV here instead of stdout");

  ConstructOpts co;
  auto* sc_construct = app.add_subcommand(
      "construct", "build a spanning witness on the complete multipartite graph of a skeleton");
  add_source_options(sc_construct, co.src);
  sc_construct->add_option("--y", co.y, "nodes per original block, comma separated")
      ->required()
      ->delimiter(',');
  sc_construct->add_option("--kind", co.kind, "cycle | decomposition")
      ->check(CLI::IsMember({"cycle", "decomposition"}));
  sc_construct->add_option("--max-cycles", co.max_cycles, "abort past this many skeleton cycles");
  sc_construct->add_option("-o,--output", co.output, "write witness JSON here instead of stdout");
  sc_construct->add_option("--edges", co.edges, "also write the graph as an edge list file");

  std::vector<const char*> argv;
  argv.push_back("gham");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  if (sc_presets->parsed()) {
    for (const auto& name : preset_names()) out << name << "\n";
    return kOk;
  }
  if (sc_analyze->parsed()) return cmd_analyze(ao, out, err);
  if (sc_estimate->parsed()) return cmd_estimate(eo, out, err);
  if (sc_construct->parsed()) return cmd_construct(co, out, err);
  return kUsage;
}

}  // namespace gham
