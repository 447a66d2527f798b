#include "girthscope/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>

#include "girthscope/bench.hpp"
#include "girthscope/edge_fast.hpp"
#include "girthscope/enumerate.hpp"
#include "girthscope/errors.hpp"
#include "girthscope/girth.hpp"
#include "girthscope/graph.hpp"
#include "girthscope/induced_fast.hpp"
#include "girthscope/variants.hpp"
#include "girthscope/verify.hpp"

namespace girthscope {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;
  std::string family;
  bool dimacs = false;
  bool weighted = false;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("-g,--graph", path, "Graph file (edge list, or DIMACS with --dimacs); '-' reads stdin");
    auto* gen = cmd->add_option("--generate", family, "Built-in graph: Kn, Cn, Pn or petersen");
    file->excludes(gen);
    cmd->add_flag("--dimacs", dimacs, "Read the graph file as DIMACS");
    cmd->add_flag("--weighted", weighted, "Read edge weights and use weighted cycle lengths");
  }

  std::string name() const { return path.empty() ? family : path; }

  Graph load() const {
    if (!family.empty()) {
      if (weighted) throw UsageError("--weighted needs a graph file with weights");
      return make_family(family);
    }
    if (path.empty()) throw UsageError("no graph given; use --graph FILE or --generate NAME");
    if (path == "-") return dimacs ? parse_dimacs(std::cin, weighted) : parse_edge_list(std::cin, weighted);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return dimacs ? parse_dimacs(in, weighted) : parse_edge_list(in, weighted);
  }
};

enum class Engine { kAuto, kFast, kBaseline, kBrute };

struct EnumOptions {
  std::string k = "inf";
  Mode mode = Mode::kInduced;
  Connectivity connectivity = Connectivity::kConnected;
  Engine engine = Engine::kAuto;
  std::optional<std::uint64_t> limit;
  bool no_empty = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-k", k, "Girth threshold (integer >= 3, or inf)")->capture_default_str();
    cmd->add_option("--mode", mode, "induced or edge")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Mode>{{"induced", Mode::kInduced}, {"edge", Mode::kEdge}}));
    cmd->add_option("--connectivity", connectivity, "connected or any")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Connectivity>{{"connected", Connectivity::kConnected}, {"any", Connectivity::kAny}}));
    cmd->add_option("--algorithm", engine, "auto, fast, baseline or brute")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Engine>{
            {"auto", Engine::kAuto}, {"fast", Engine::kFast}, {"baseline", Engine::kBaseline}, {"brute", Engine::kBrute}}));
    cmd->add_option("--limit", limit, "Stop after this many solutions");
    cmd->add_flag("--no-empty", no_empty, "Do not report the empty solution");
  }

  EnumConfig config(const Graph& g, bool weighted) const {
    EnumConfig cfg;
    cfg.k = Length::parse(k);
    cfg.mode = mode;
    cfg.connectivity = connectivity;
    cfg.weighted = weighted;
    cfg.include_empty = !no_empty;
    cfg.limit = limit;
    cfg.validate(g);
    return cfg;
  }

  Engine resolve(const EnumConfig& cfg) const {
    const bool fast_ok = !cfg.weighted && cfg.connectivity == Connectivity::kConnected;
    if (engine == Engine::kFast && !fast_ok)
      throw UsageError("--algorithm fast supports connected, unweighted enumeration only; use --algorithm baseline");
    if (engine == Engine::kAuto) return fast_ok ? Engine::kFast : Engine::kBaseline;
    return engine;
  }
};

std::uint64_t run_engine(const Graph& g, const EnumConfig& cfg, Engine engine, const SolutionSink& sink) {
  switch (engine) {
    case Engine::kFast:
      return cfg.mode == Mode::kInduced ? enumerate_induced_fast(g, cfg, sink) : enumerate_edges_fast(g, cfg, sink);
    case Engine::kBrute: {
      const auto all = brute_force_enumerate(g, cfg);
      std::uint64_t i = 0;
      for (; i < all.size(); ++i)
        if (!sink(all[i], i)) return i + 1;
      return i;
    }
    default:
      return enumerate_variant(g, cfg, sink);
  }
}

/// --output FILE or the given stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw IoError("cannot write " + path);
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate subgraphs with girth at least k."};
  app.name("girthscope");
  app.require_subcommand(1);

  GraphSource girth_src;
  auto* girth_cmd = app.add_subcommand("girth", "Print the girth of a graph");
  girth_src.attach(girth_cmd);

  GraphSource enum_src;
  EnumOptions enum_opts;
  std::string output_path;
  bool endpoints = false;
  auto* enum_cmd = app.add_subcommand("enum", "List solutions, one per line");
  enum_src.attach(enum_cmd);
  enum_opts.attach(enum_cmd);
  enum_cmd->add_option("-o,--output", output_path, "Write solutions to this file");
  enum_cmd->add_flag("--endpoints", endpoints, "Edge mode: print edges as u-v instead of edge ids");

  GraphSource count_src;
  EnumOptions count_opts;
  auto* count_cmd = app.add_subcommand("count", "Print the number of solutions");
  count_src.attach(count_cmd);
  count_opts.attach(count_cmd);

  VertexId ext_n = 0;
  std::string ext_k = "4";
  ExtremalOptions ext_opts;
  std::optional<std::uint64_t> ext_budget;
  bool ext_arbitrary = false;
  bool ext_unique = false;
  auto* ext_cmd = app.add_subcommand("extremal", "Densest n-vertex graphs of girth at least k");
  ext_cmd->add_option("-n", ext_n, "Number of vertices")->required()->check(CLI::Range(1, 64));
  ext_cmd->add_option("-k", ext_k, "Girth threshold (integer >= 3, or inf)")->capture_default_str();
  ext_cmd->add_flag("--arbitrary", ext_arbitrary, "Search all edge subgraphs, not only connected ones (small n)");
  ext_cmd->add_flag("--parallel", ext_opts.parallel, "Split the search across threads");
  ext_cmd->add_option("--max-explored", ext_budget, "Stop after this many solutions and report a partial result");
  ext_cmd->add_flag("--unique", ext_unique, "Keep one witness per isomorphism class (n <= 8)");

  GraphSource bench_src;
  std::string bench_k = "4";
  Mode bench_mode = Mode::kEdge;
  BenchOptions bench_opts;
  bool no_brute = false;
  bool no_baseline = false;
  int brute_budget = 24;
  auto* bench_cmd = app.add_subcommand("bench", "Time brute force, baseline and the incremental engine");
  bench_src.attach(bench_cmd);
  bench_cmd->add_option("-k", bench_k, "Girth threshold (integer >= 3, or inf)")->capture_default_str();
  bench_cmd->add_option("--mode", bench_mode, "induced or edge")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Mode>{{"induced", Mode::kInduced}, {"edge", Mode::kEdge}}));
  bench_cmd->add_option("--limit", bench_opts.limit, "Stop every engine after this many solutions");
  bench_cmd->add_flag("--no-brute", no_brute, "Skip brute force");
  bench_cmd->add_flag("--no-baseline", no_baseline, "Skip the baseline engine");
  bench_cmd->add_option("--brute-budget", brute_budget, "Largest element count brute force may scan")->capture_default_str();

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all engines on a small-graph corpus");
  verify_cmd->add_option("--seed", verify_opts.seed, "Seed for the random part of the corpus")->capture_default_str();
  verify_cmd->add_option("--random", verify_opts.random_graphs, "Number of random graphs")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "girthscope: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (girth_cmd->parsed()) {
      const Graph g = girth_src.load();
      out << girth(g) << "\n";
      return kExitOk;
    }

    if (enum_cmd->parsed() || count_cmd->parsed()) {
      const bool listing = enum_cmd->parsed();
      const auto& src = listing ? enum_src : count_src;
      const auto& opts = listing ? enum_opts : count_opts;
      const Graph g = src.load();
      const EnumConfig cfg = opts.config(g, src.weighted);
      const Engine engine = opts.resolve(cfg);
      if (!listing) {
        out << run_engine(g, cfg, engine, [](auto, auto) { return true; }) << "\n";
        return kExitOk;
      }
      if (endpoints && cfg.mode != Mode::kEdge) throw UsageError("--endpoints applies to --mode edge only");
      Output sink_out(output_path, out);
      auto& os = sink_out.get();
      run_engine(g, cfg, engine, [&](std::span<const std::int32_t> s, std::uint64_t) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i) os << ' ';
          if (endpoints)
            os << g.edge(s[i]).u << '-' << g.edge(s[i]).v;
          else
            os << s[i];
        }
        os << '\n';
        return true;
      });
      sink_out.finish();
      return kExitOk;
    }

    if (ext_cmd->parsed()) {
      ext_opts.connected = !ext_arbitrary;
      ext_opts.max_explored = ext_budget;
      auto result = densest_girth_graphs(ext_n, Length::parse(ext_k), ext_opts);
      if (ext_unique) {
        result.witnesses = distinct_up_to_isomorphism(make_complete(ext_n), result.witnesses);
        result.up_to_isomorphism = true;
      }
      out << format_extremal(result);
      return result.complete ? kExitOk : kExitBudget;
    }

    if (bench_cmd->parsed()) {
      const Graph g = bench_src.load();
      if (bench_src.weighted) throw UsageError("bench compares the unweighted engines; drop --weighted");
      bench_opts.run_brute = !no_brute;
      bench_opts.run_baseline = !no_baseline;
      bench_opts.budget = {brute_budget, brute_budget};
      const auto report = bench_compare(g, bench_src.name(), Length::parse(bench_k), bench_mode, bench_opts);
      out << format_bench(report);
      return report.ok ? kExitOk : kExitCheckFailed;
    }

    if (verify_cmd->parsed()) {
      const auto report = run_verification(verify_opts);
      out << "graphs=" << report.graphs << "\n"
          << "checks=" << report.checks << "\n"
          << "mismatches=" << report.mismatches.size() << "\n";
      for (const auto& m : report.mismatches) err << "girthscope: " << m << "\n";
      return report.ok() ? kExitOk : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "girthscope: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "girthscope: parse error, " << e.what() << "\n";
    return kExitInputParse;
  } catch (const ValidationError& e) {
    err << "girthscope: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const BudgetError& e) {
    err << "girthscope: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const IoError& e) {
    err << "girthscope: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "girthscope: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace girthscope
