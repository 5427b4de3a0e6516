// Copyright 2026 The seqsub Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// seqsub: train / solve / evaluate / oracle-verify / bench.
//
// Exit codes: 0 ok, 2 input error, 3 config error, 4 invariant violation
// (including a failed approximation-bound check).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqsub/bench.h"
#include "seqsub/errors.h"
#include "seqsub/eval.h"
#include "seqsub/ingest.h"
#include "seqsub/io.h"
#include "seqsub/oracle.h"
#include "seqsub/random_instances.h"
#include "seqsub/solvers.h"
#include "seqsub/utility.h"

namespace seqsub {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;
constexpr int kExitInvariant = 4;

struct TrainFlags {
  std::int64_t min_user_events = 0;
  std::int64_t max_user_events = 0;
  std::int64_t min_item_events = 0;
  int max_edge_size = 3;
  double d = 20.0;
  std::int64_t min_count = 2;
};

void AddTrainFlags(CLI::App* cmd, TrainFlags& f) {
  cmd->add_option("--max-edge-size", f.max_edge_size,
                  "Longest item tuple turned into a hyperedge")
      ->capture_default_str();
  cmd->add_option("--d", f.d, "Smoothing added to every denominator")
      ->capture_default_str();
  cmd->add_option("--min-count", f.min_count,
                  "Drop tuples seen by fewer users than this")
      ->capture_default_str();
  cmd->add_option("--min-user-events", f.min_user_events,
                  "Drop users with fewer events");
  cmd->add_option("--max-user-events", f.max_user_events,
                  "Drop users with more events (0 = no limit)");
  cmd->add_option("--min-item-events", f.min_item_events,
                  "Drop items seen by fewer users");
}

TrainConfig ToTrainConfig(const TrainFlags& f) {
  TrainConfig c;
  c.max_edge_size = f.max_edge_size;
  c.smoothing = f.d;
  c.min_count = f.min_count;
  c.min_user_events = f.min_user_events;
  c.max_user_events = f.max_user_events;
  c.min_item_events = f.min_item_events;
  return c;
}

void EmitJson(const nlohmann::json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << '\n';
  } else {
    WriteJsonFile(path, doc);
  }
}

Algorithm RequireAlgorithm(const std::string& name) {
  const auto a = ParseAlgorithm(name);
  if (!a) throw ConfigError("unknown algorithm '" + name + "'");
  return *a;
}

Direction RequireDirection(const std::string& name) {
  const auto d = ParseDirection(name);
  if (!d) throw ConfigError("unknown direction '" + name + "'");
  return *d;
}

// ---------------------------------------------------------------------------

struct TrainArgs {
  std::string input;
  std::string output;
  std::string counts_output;
  std::string history;
  TrainFlags train;
};

int RunTrain(const TrainArgs& args) {
  const TrainConfig config = [&] {
    TrainConfig c = ToTrainConfig(args.train);
    c.Validate();
    return c;
  }();
  const InteractionLog log = ReadInteractionLogFile(args.input);
  const std::vector<UserSequence> users = ExtractUserSequences(log, config);
  std::vector<Sequence> sequences;
  for (const UserSequence& u : users) sequences.push_back(u.items);
  const SubsequenceCounts counts =
      CountSubsequences(sequences, config.max_edge_size);

  const auto n = static_cast<std::int64_t>(log.items.size());
  std::optional<Sequence> history;
  if (!args.history.empty()) {
    history = ParseSequence(args.history, log.items.names(), n);
  }
  const TrainedModel model = BuildModel(counts, n, config, history);
  WriteJsonFile(args.output, TrainedModelToJson(model, log.items.names(),
                                                config.max_edge_size));
  std::string counts_path = args.counts_output;
  if (counts_path.empty()) {
    counts_path = args.output;
    if (counts_path.ends_with(".json")) {
      counts_path.resize(counts_path.size() - 5);
    }
    counts_path += ".counts.json";
  }
  WriteJsonFile(counts_path, CountsToJson(counts, config.min_count));
  std::cerr << "trained " << model.graph.num_edges() << " edges over " << n
            << " items from " << users.size() << " users\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string model;
  int k = 0;
  std::string algorithm = "hyper-sequence-greedy";
  std::string direction = "forward";
  std::optional<bool> fill_to_k;
  std::string history;
  std::string output;
};

int RunSolve(const SolveArgs& args) {
  const Algorithm algorithm = RequireAlgorithm(args.algorithm);
  SolveConfig config;
  config.k = args.k;
  config.direction = RequireDirection(args.direction);
  config.fill_to_k = args.fill_to_k;
  if (config.k < 0) throw ConfigError("--k must be non-negative");

  const HypergraphDocument doc = ReadHypergraphFile(args.model);
  Sequence history;
  if (!args.history.empty()) {
    history = ParseSequence(args.history, doc.vertex_names,
                            doc.graph.num_vertices());
  }
  const DirectedHypergraph graph =
      history.empty() || algorithm == Algorithm::kFrequency
          ? doc.graph
          : ConditionOnHistory(doc.graph, history);
  if (algorithm == Algorithm::kSequenceGreedy && graph.max_edge_size() > 2) {
    throw ConfigError(
        "sequence-greedy needs edges of at most two vertices; this model has "
        "r=" + std::to_string(graph.max_edge_size()) +
        " (use --algorithm hyper-sequence-greedy)");
  }
  const auto h = MakeUtility(doc.utility, graph);
  const SolveReport report = Solve(graph, *h, algorithm, config, history);
  EmitJson(SolveReportToJson(report, doc.vertex_names), args.output);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string model;
  int k = 0;
  std::string algorithm = "hyper-sequence-greedy";
  std::string direction = "forward";
  std::optional<bool> fill_to_k;
  std::uint64_t cap = kDefaultOracleCap;
  int random = 0;
  std::uint64_t seed = 0;
  int n = 6;
  int edges = 12;
  int max_edge_size = 2;
  std::string utility = "modular-count";
};

int RunOracleVerify(const OracleArgs& args) {
  const Algorithm algorithm = RequireAlgorithm(args.algorithm);
  SolveConfig config;
  config.k = args.k;
  config.direction = RequireDirection(args.direction);
  config.fill_to_k = args.fill_to_k;
  if (config.k < 0) throw ConfigError("--k must be non-negative");
  if (args.model.empty() == (args.random == 0)) {
    throw ConfigError("give exactly one of --model and --random");
  }

  bool all_hold = true;
  auto check = [&](const DirectedHypergraph& graph, const UtilityFunction& h,
                   int index) {
    if (algorithm == Algorithm::kSequenceGreedy && graph.max_edge_size() > 2) {
      throw ConfigError("sequence-greedy needs edges of at most two vertices");
    }
    const SolveReport report = Solve(graph, h, algorithm, config);
    const RatioVerdict v = VerifyRatio(graph, h, config.k, report, args.cap);
    all_hold = all_hold && v.holds;
    std::printf("instance=%d objective=%.12g opt=%.12g ratio=%.12g "
                "bound=%.12g holds=%s\n",
                index, report.objective, v.opt_value, v.ratio, v.bound,
                v.holds ? "true" : "false");
  };

  if (!args.model.empty()) {
    const HypergraphDocument doc = ReadHypergraphFile(args.model);
    check(doc.graph, *MakeUtility(doc.utility, doc.graph), 0);
  } else {
    const auto kind = ParseUtilityKind(args.utility);
    if (!kind) throw ConfigError("unknown utility '" + args.utility + "'");
    std::mt19937_64 rng(args.seed);
    for (int i = 0; i < args.random; ++i) {
      RandomInstanceOptions options;
      options.num_vertices = args.n;
      options.num_edges = args.edges;
      options.max_edge_size = args.max_edge_size;
      options.utility = *kind;
      const RandomInstance inst = MakeRandomInstance(rng, options);
      check(inst.graph, *inst.h, i);
    }
  }
  std::printf("verdict=%s\n", all_hold ? "holds" : "violated");
  return all_hold ? kExitOk : kExitInvariant;
}

// ---------------------------------------------------------------------------

struct EvaluateArgs {
  std::string input;
  std::vector<int> ks = {5};
  int prefix_len = 8;
  int folds = 10;
  std::uint64_t seed = 0;
  int workers = 1;
  std::vector<std::string> algorithms = {"sequence-greedy",
                                         "hyper-sequence-greedy", "frequency"};
  std::string output_json;
  std::string output_csv;
  std::string plot_csv;
  TrainFlags train;
};

int RunEvaluate(const EvaluateArgs& args) {
  ExperimentConfig config;
  config.train = ToTrainConfig(args.train);
  config.train.folds = args.folds;
  config.train.Validate();
  config.prefix_len = args.prefix_len;
  config.seed = args.seed;
  config.workers = args.workers;
  config.algorithms.clear();
  for (const std::string& name : args.algorithms) {
    for (const AlgorithmSpec& spec : DefaultAlgorithms()) {
      if (spec.name == name) config.algorithms.push_back(spec);
    }
    if (config.algorithms.empty() || config.algorithms.back().name != name) {
      throw ConfigError("unknown algorithm '" + name + "'");
    }
  }

  const InteractionLog log = ReadInteractionLogFile(args.input);
  const std::vector<UserSequence> users =
      ExtractUserSequences(log, config.train);
  std::vector<EvalReport> reports;
  for (int k : args.ks) {
    config.k = k;
    std::vector<EvalReport> part = RunExperiment(
        users, static_cast<std::int64_t>(log.items.size()), config);
    for (EvalReport& r : part) {
      if (!r.error.empty()) {
        std::cerr << "fold " << r.fold << " (" << r.algorithm
                  << ") failed: " << r.error << '\n';
      }
      reports.push_back(std::move(r));
    }
  }
  const std::vector<PlotPoint> summary = Summarize(reports);

  if (!args.output_json.empty()) {
    WriteJsonFile(args.output_json,
                  EvalReportsToJson(reports, log.items.names()));
  }
  if (!args.output_csv.empty()) {
    std::ofstream out(args.output_csv);
    if (!out) throw InputError("cannot write " + args.output_csv);
    WriteEvalCsv(out, reports);
  }
  if (!args.plot_csv.empty()) {
    std::ofstream out(args.plot_csv);
    if (!out) throw InputError("cannot write " + args.plot_csv);
    WritePlotCsv(out, summary);
  }
  WritePlotCsv(std::cout, summary);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::vector<std::int64_t> edge_counts = {1000, 3000, 10000, 30000, 100000};
  int k = 50;
  int repetitions = 5;
  std::uint64_t seed = 0;
  int workers = 1;
};

int RunBench(const BenchArgs& args) {
  const std::vector<BenchPoint> points = BenchmarkSequenceGreedy(
      args.edge_counts, args.k, args.repetitions, args.seed, args.workers);
  std::printf("m,k,iterations,seconds\n");
  for (const BenchPoint& p : points) {
    std::printf("%lld,%d,%zu,%.9f\n", static_cast<long long>(p.num_edges),
                args.k, p.iterations, p.seconds);
  }
  if (points.size() >= 2) {
    std::printf("# log-log slope: %.4f\n", FitLogLogSlope(points));
  }
  return kExitOk;
}

void AddFillFlags(CLI::App* cmd, std::optional<bool>& fill) {
  cmd->add_flag_callback("--fill-to-k", [&fill] { fill = true; },
                         "Top sigma up to k vertices after the main loop");
  cmd->add_flag_callback("--no-fill-to-k", [&fill] { fill = false; },
                         "Return the raw greedy output");
}

int Main(int argc, char** argv) {
  CLI::App app{"Sequence-submodular maximization over directed hypergraphs"};
  app.require_subcommand(1);

  TrainArgs train;
  CLI::App* train_cmd =
      app.add_subcommand("train", "Fit edge probabilities from a log CSV");
  train_cmd->add_option("--input", train.input, "user,item,timestamp CSV")
      ->required();
  train_cmd->add_option("--output", train.output, "Model JSON path")
      ->required();
  train_cmd->add_option("--counts", train.counts_output,
                        "Counts sidecar path (default <output>.counts.json)");
  train_cmd->add_option("--history", train.history,
                        "Comma-separated item names; enables the "
                        "history-aware branch");
  AddTrainFlags(train_cmd, train.train);

  SolveArgs solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Run a solver on a hypergraph model");
  solve_cmd->add_option("--model", solve.model, "Hypergraph JSON or CSV")
      ->required();
  solve_cmd->add_option("--k", solve.k, "Cardinality")->required();
  solve_cmd->add_option("--algorithm", solve.algorithm,
                        "sequence-greedy | hyper-sequence-greedy | frequency")
      ->capture_default_str();
  solve_cmd->add_option("--direction", solve.direction,
                        "forward | backward | both")
      ->capture_default_str();
  solve_cmd->add_option("--history", solve.history,
                        "Comma-separated vertices already consumed");
  solve_cmd->add_option("--output", solve.output,
                        "Report path (default stdout)");
  AddFillFlags(solve_cmd, solve.fill_to_k);

  OracleArgs oracle;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-verify", "Compare a solver with the brute-force optimum");
  oracle_cmd->add_option("--model", oracle.model, "Hypergraph JSON or CSV");
  oracle_cmd->add_option("--random", oracle.random,
                         "Check this many random instances instead");
  oracle_cmd->add_option("--k", oracle.k, "Cardinality")->required();
  oracle_cmd->add_option("--algorithm", oracle.algorithm)
      ->capture_default_str();
  oracle_cmd->add_option("--direction", oracle.direction)
      ->capture_default_str();
  oracle_cmd->add_option("--cap", oracle.cap, "Enumeration cap")
      ->capture_default_str();
  oracle_cmd->add_option("--seed", oracle.seed)->capture_default_str();
  oracle_cmd->add_option("--n", oracle.n, "Random instance vertex count")
      ->capture_default_str();
  oracle_cmd->add_option("--edges", oracle.edges,
                         "Random instance edge count")
      ->capture_default_str();
  oracle_cmd->add_option("--max-edge-size", oracle.max_edge_size,
                         "Random instance r")
      ->capture_default_str();
  oracle_cmd->add_option("--utility", oracle.utility,
                         "modular-count | probabilistic-coverage")
      ->capture_default_str();
  AddFillFlags(oracle_cmd, oracle.fill_to_k);

  EvaluateArgs eval;
  CLI::App* eval_cmd = app.add_subcommand(
      "evaluate", "Cross-validated next-items prediction experiment");
  eval_cmd->add_option("--input", eval.input, "user,item,timestamp CSV")
      ->required();
  eval_cmd->add_option("--k", eval.ks, "One or more cardinalities")
      ->delimiter(',')
      ->capture_default_str();
  eval_cmd->add_option("--prefix-len", eval.prefix_len,
                       "History length per test user")
      ->capture_default_str();
  eval_cmd->add_option("--folds", eval.folds)->capture_default_str();
  eval_cmd->add_option("--seed", eval.seed)->capture_default_str();
  eval_cmd->add_option("--workers", eval.workers)->capture_default_str();
  eval_cmd->add_option("--algorithms", eval.algorithms)
      ->delimiter(',')
      ->capture_default_str();
  eval_cmd->add_option("--output-json", eval.output_json);
  eval_cmd->add_option("--output-csv", eval.output_csv);
  eval_cmd->add_option("--plot-csv", eval.plot_csv,
                       "k vs mean tau per algorithm");
  AddTrainFlags(eval_cmd, eval.train);

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Time Sequence-Greedy against the edge count");
  bench_cmd->add_option("--m", bench.edge_counts, "Edge counts")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--k", bench.k)->capture_default_str();
  bench_cmd->add_option("--reps", bench.repetitions)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--workers", bench.workers)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*train_cmd) return RunTrain(train);
    if (*solve_cmd) return RunSolve(solve);
    if (*oracle_cmd) return RunOracleVerify(oracle);
    if (*eval_cmd) return RunEvaluate(eval);
    if (*bench_cmd) return RunBench(bench);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UndefinedMetricError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitConfig;
}

}  // namespace
}  // namespace seqsub

int main(int argc, char** argv) { return seqsub::Main(argc, argv); }
