// Command-line front end: gen, analyze, classes, solve, verify.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "kempe/analyzer.hpp"
#include "kempe/corpus.hpp"
#include "kempe/graph_io.hpp"
#include "kempe/json_io.hpp"
#include "kempe/parallel.hpp"
#include "kempe/solver.hpp"

using namespace kempe;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::ofstream file;
  std::ostream* out = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw UsageError("cannot open " + path + " for writing");
    out = &file;
  }
  void line(const Json& j) { *out << j.dump() << '\n'; }
  void line(const std::string& s) { *out << s << '\n'; }
};

std::vector<Graph> read_input(const std::string& input) {
  if (input.empty()) throw UsageError("--input is required");
  return load_graphs(input);
}

// A colouring given inline as JSON or as a path to a JSON file.
Coloring read_coloring(const std::string& arg) {
  std::string text = arg;
  if (arg.find('{') == std::string::npos) {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read colouring file " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return coloring_from_json(parse_json(text));
}

int cmd_gen(const std::vector<int>& orders, const std::string& out_path) {
  Output out(out_path);
  for (int n : orders)
    for (const auto& g : gen_cubic(n)) out.line(encode_graph6(g));
  return 0;
}

int cmd_analyze(const std::string& input, const std::string& out_path) {
  const auto graphs = read_input(input);
  Output out(out_path);
  for (const auto& g : graphs) out.line(structure_to_json(analyze_structure(g)));
  return 0;
}

int cmd_classes(const std::string& input, int k, std::size_t ceiling, int jobs,
                const std::string& out_path) {
  if (k < 1) throw UsageError("--k must be positive");
  const auto graphs = read_input(input);
  std::vector<ClassReport> reports(graphs.size());
  parallel_for(graphs.size(), jobs,
               [&](std::size_t i) { reports[i] = kempe_classes(graphs[i], k, ceiling).report; });
  Output out(out_path);
  for (const auto& r : reports) out.line(class_report_to_json(r));
  return 0;
}

int cmd_solve(const std::string& input, const std::vector<std::string>& pair,
              const std::string& out_path) {
  const auto graphs = read_input(input);
  if (graphs.size() != 1) throw UsageError("solve expects exactly one graph");
  if (pair.size() != 2) throw UsageError("--pair takes two colourings");
  const Graph& g = graphs.front();
  const Coloring alpha = read_coloring(pair[0]);
  const Coloring beta = read_coloring(pair[1]);
  Output out(out_path);
  try {
    const auto result = solve(g, alpha, beta);
    const auto check = validate(g, result.witness);
    if (!check.ok || check.end != beta) {
      std::cerr << "witness failed validation: " << check.reason << '\n';
      return kExitFail;
    }
    out.line(Json{{"equivalent", true},
                  {"witness", sequence_to_json(result.witness)},
                  {"trace", trace_to_json(result.trace, result.witness.moves.size())}});
    return 0;
  } catch (const NotEquivalent& e) {
    out.line(Json{{"equivalent", false}, {"reason", e.what()}});
    return kExitFail;
  }
}

struct SolverCheck {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::string first_error;
};

// Solves `pairs` seeded random pairs; prism pairs across classes must be rejected.
SolverCheck check_solver(const Graph& g, std::size_t pairs, std::uint64_t seed,
                         std::size_t ceiling) {
  SolverCheck sc;
  if (is_k4(g)) return sc;
  const auto part = kempe_classes(g, 3, ceiling);
  const auto& all = part.colorings;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::size_t i = pick(rng), j = pick(rng);
    ++sc.pairs;
    const bool same_class = part.class_of[i] == part.class_of[j];
    std::string error;
    try {
      const auto r = solve(g, all[i], all[j]);
      const auto check = validate(g, r.witness);
      if (!same_class) error = "solved a pair from different classes";
      else if (!check.ok || check.end != all[j]) error = "invalid witness: " + check.reason;
    } catch (const NotEquivalent& e) {
      if (same_class) error = e.what();
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (!error.empty()) {
      if (!sc.failures) sc.first_error = to_string(all[i]) + " -> " + to_string(all[j]) + ": " + error;
      ++sc.failures;
    }
  }
  return sc;
}

int cmd_verify(const std::string& input, const std::vector<int>& orders, int jobs,
               std::size_t ceiling, std::size_t pairs, std::uint64_t seed,
               const std::string& out_path) {
  std::vector<Graph> corpus;
  if (!input.empty()) {
    corpus = read_input(input);
  } else {
    if (orders.empty()) throw UsageError("verify needs --input or --n");
    for (int n : orders) {
      auto part = gen_cubic(n);
      corpus.insert(corpus.end(), part.begin(), part.end());
    }
  }
  auto verdicts = verify_theorem(corpus, jobs, ceiling);
  std::vector<SolverCheck> checks(corpus.size());
  if (pairs > 0)
    parallel_for(corpus.size(), jobs, [&](std::size_t i) {
      if (verdicts[i].skipped) return;
      checks[i] = check_solver(corpus[i], pairs, seed + i, ceiling);
      if (checks[i].failures) verdicts[i].pass = false;
    });

  Output out(out_path);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Json j = verdict_to_json(verdicts[i]);
    if (pairs > 0 && !verdicts[i].skipped) {
      j["solver_pairs"] = checks[i].pairs;
      j["solver_failures"] = checks[i].failures;
      if (checks[i].failures) j["solver_error"] = checks[i].first_error;
    }
    out.line(j);
  }
  const auto summary = summarize(verdicts);
  out.line(summary_to_json(summary));
  return summary.failed ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kempe classes and Kempe-change witnesses for graph colourings"};
  app.require_subcommand(1);

  std::string input, out_path;
  int k = 3, jobs = 1;
  std::size_t ceiling = kDefaultCeiling, pairs = 0;
  std::uint64_t seed = 1;
  std::vector<int> orders;
  std::vector<std::string> pair;

  auto* gen = app.add_subcommand("gen", "emit all connected cubic graphs on n vertices (graph6)");
  gen->add_option("--n", orders, "orders (even, 4..10)")->required()->delimiter(',');
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "structural report per graph");
  analyze->add_option("--input", input, "graph6 or edge-list file, - for stdin")->required();
  analyze->add_option("--out", out_path, "output file");

  auto* classes = app.add_subcommand("classes", "Kempe classes of all k-colourings");
  classes->add_option("--input", input, "graph6 or edge-list file, - for stdin")->required();
  classes->add_option("--k", k, "number of colours")->capture_default_str();
  classes->add_option("--ceiling", ceiling, "maximum number of colourings")->capture_default_str();
  classes->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  classes->add_option("--out", out_path, "output file");

  auto* solve_cmd = app.add_subcommand("solve", "Kempe-change witness between two 3-colourings");
  solve_cmd->add_option("--input", input, "file holding one cubic graph")->required();
  solve_cmd->add_option("--pair", pair, "two colourings: inline JSON or file paths")
      ->required()
      ->expected(2);
  solve_cmd->add_option("--k", k, "number of colours (only 3 is supported)")->capture_default_str();
  solve_cmd->add_option("--out", out_path, "output file");

  auto* verify = app.add_subcommand("verify", "check the cubic 3-colouring dichotomy on a corpus");
  auto* vin = verify->add_option("--input", input, "graph6 corpus file");
  verify->add_option("--n", orders, "generate the corpus for these orders instead")
      ->delimiter(',')
      ->excludes(vin);
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  verify->add_option("--ceiling", ceiling, "maximum colourings per graph")->capture_default_str();
  verify->add_option("--pairs", pairs, "also solve this many random pairs per graph")
      ->capture_default_str();
  verify->add_option("--seed", seed, "seed for sampled pairs")->capture_default_str();
  verify->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(orders, out_path);
    if (*analyze) return cmd_analyze(input, out_path);
    if (*classes) return cmd_classes(input, k, ceiling, jobs, out_path);
    if (*solve_cmd) {
      if (k != 3) throw UsageError("solve supports k = 3 only");
      return cmd_solve(input, pair, out_path);
    }
    if (*verify) return cmd_verify(input, orders, jobs, ceiling, pairs, seed, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
