//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the kpath library: dataset generation,
// substructure counting (brute force and tuple message passing), edge-drop
// augmentation, evaluation metrics, robustness/imbalance/few-shot scenarios,
// differential reports and a labeling benchmark. All randomized subcommands
// take --seed and produce byte-identical files for any --threads value.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kpath/kpath.hpp"

namespace {

using namespace kpath;

NodeRange parse_node_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw CLI::ValidationError("--nodes", "expected MIN:MAX, got \"" + text + "\"");
  }
  NodeRange range;
  range.min = static_cast<std::uint32_t>(std::stoul(text.substr(0, colon)));
  range.max = static_cast<std::uint32_t>(std::stoul(text.substr(colon + 1)));
  return range;
}

std::array<std::uint32_t, 3> parse_ratio(const std::string& text) {
  std::array<std::uint32_t, 3> ratio{};
  std::stringstream ss(text);
  std::string part;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(ss, part, ':')) {
      throw CLI::ValidationError("--split", "expected A:B:C, got \"" + text + "\"");
    }
    ratio[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(std::stoul(part));
  }
  return ratio;
}

std::vector<SubstructureKind> parse_kinds(const std::string& text) {
  if (text == "all") {
    return {kAllSubstructureKinds.begin(), kAllSubstructureKinds.end()};
  }
  std::vector<SubstructureKind> kinds;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto kind = kind_from_name(part);
    if (!kind) throw CLI::ValidationError("--kinds", "unknown kind \"" + part + "\"");
    kinds.push_back(*kind);
  }
  if (kinds.empty()) throw CLI::ValidationError("--kinds", "no kinds given");
  return kinds;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) values.push_back(std::stoi(part));
  if (values.empty()) throw CLI::ValidationError(flag, "empty list");
  return values;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string kinds = "all";
  std::size_t num = 0;
  std::string nodes = "15:23";
  double avg_edges = 31.34;
  std::uint64_t seed = 0;
  std::string split = "3:2:5";
  std::string out;
  unsigned threads = 1;
};

void run_gen(const GenArgs& args) {
  GenSpec spec;
  spec.kinds = parse_kinds(args.kinds);
  spec.num_graphs = args.num;
  spec.node_range = parse_node_range(args.nodes);
  spec.target_avg_edges = args.avg_edges;
  spec.seed = args.seed;
  spec.split_ratio = parse_ratio(args.split);
  const auto [records, stats] = generate_counting_dataset(spec, args.threads);
  write_dataset(records, args.out);
  std::size_t train = 0, valid = 0, test = 0;
  for (const auto& rec : records) {
    train += is_split(rec, "train");
    valid += is_split(rec, "valid");
    test += is_split(rec, "test");
  }
  std::printf("wrote %zu records to %s\n", records.size(), args.out.c_str());
  std::printf("mean nodes %.4f (sd %.4f), mean edges %.4f (sd %.4f)\n",
              stats.mean_nodes, stats.stddev_nodes, stats.mean_edges,
              stats.stddev_edges);
  std::printf("split sizes train/valid/test = %zu/%zu/%zu\n", train, valid, test);
  for (const auto& [name, t] : stats.targets) {
    std::printf("label %s: mean %.4f var %.4f\n", name.c_str(), t.mean, t.variance);
  }
}

// ---------------------------------------------------------------------------
// count

struct CountArgs {
  std::string in;
  std::string kind;
  std::string method = "oracle";
  int k = -1;  // derived from the kind when omitted
  std::string out;
  unsigned threads = 1;
};

struct KindShape {
  bool is_cycle = false;
  bool is_path = false;
  int size = 0;  // nodes for cycles, edges for paths
};

KindShape kind_shape(SubstructureKind kind) {
  switch (kind) {
    case SubstructureKind::Cycle3: return {true, false, 3};
    case SubstructureKind::Cycle4: return {true, false, 4};
    case SubstructureKind::Cycle5: return {true, false, 5};
    case SubstructureKind::Cycle6: return {true, false, 6};
    case SubstructureKind::Cycle7: return {true, false, 7};
    case SubstructureKind::Cycle8: return {true, false, 8};
    case SubstructureKind::Path4: return {false, true, 4};
    case SubstructureKind::Path5: return {false, true, 5};
    case SubstructureKind::Path6: return {false, true, 6};
    default: return {};
  }
}

std::int64_t mp_whole_graph_count(const Graph& g, SubstructureKind kind, int k,
                                  MpVariant variant) {
  const KindShape shape = kind_shape(kind);
  std::int64_t total = 0;
  if (shape.is_cycle) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) total += mp_cycles_at(g, v, k, variant);
    if (total % shape.size != 0) {
      throw std::runtime_error("mp count not divisible by cycle length on " + g.id());
    }
    return total / shape.size;  // every m-cycle is seen from each of its m nodes
  }
  for (NodeId v = 0; v < g.num_nodes(); ++v) total += mp_paths_from(g, v, k, variant);
  if (total % 2 != 0) {
    throw std::runtime_error("mp path count not divisible by 2 on " + g.id());
  }
  return total / 2;  // every undirected path is traversed from both endpoints
}

void run_count(const CountArgs& args) {
  const auto kind = kind_from_name(args.kind);
  if (!kind) throw CLI::ValidationError("--kind", "unknown kind \"" + args.kind + "\"");
  MpVariant variant = MpVariant::Corrected;
  bool use_mp = false;
  if (args.method == "mp-corrected") {
    use_mp = true;
  } else if (args.method == "mp-literal") {
    use_mp = true;
    variant = MpVariant::Literal;
  } else if (args.method != "oracle") {
    throw CLI::ValidationError("--method",
                               "expected oracle, mp-corrected or mp-literal");
  }
  int k = args.k;
  if (use_mp) {
    const KindShape shape = kind_shape(*kind);
    const int needed = shape.is_cycle ? shape.size - 3 : (shape.is_path ? shape.size - 2 : 0);
    if ((!shape.is_cycle && !shape.is_path) || needed < 1) {
      throw CLI::ValidationError("--method", "mp methods support cycle4..cycle8 and path4..path6");
    }
    if (k == -1) k = needed;
    if (k != needed) {
      throw CLI::ValidationError(
          "--k", "counting " + args.kind + " by message passing needs k=" +
                     std::to_string(needed));
    }
  }
  const auto records = read_dataset(args.in);
  std::vector<std::int64_t> counts(records.size());
  parallel_for(records.size(), args.threads, [&](std::size_t i) {
    const Graph& g = records[i].graph;
    counts[i] = use_mp ? mp_whole_graph_count(g, *kind, k, variant)
                       : oracle_count(g, *kind);
  });
  auto out = open_out(args.out);
  out << "id,count\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    out << records[i].graph.id() << ',' << counts[i] << '\n';
  }
  std::printf("counted %s on %zu graphs via %s -> %s\n", args.kind.c_str(),
              records.size(), args.method.c_str(), args.out.c_str());
}

// ---------------------------------------------------------------------------
// tuples

struct TuplesArgs {
  std::string in;
  int k = 1;
  std::uint32_t hops = 1;
  std::string mode = "simple-path";
  std::string out;
  std::string only_id;
  int root = -1;
};

void run_tuples(const TuplesArgs& args) {
  TupleMode mode;
  if (args.mode == "simple-path") {
    mode = TupleMode::SimplePath;
  } else if (args.mode == "exact-distance") {
    mode = TupleMode::ExactDistance;
  } else {
    throw CLI::ValidationError("--mode", "expected simple-path or exact-distance");
  }
  const auto records = read_dataset(args.in);
  auto out = open_out(args.out);
  std::size_t dumped = 0;
  for (const auto& rec : records) {
    const Graph& g = rec.graph;
    if (!args.only_id.empty() && g.id() != args.only_id) continue;
    for (NodeId root = 0; root < g.num_nodes(); ++root) {
      if (args.root >= 0 && root != static_cast<NodeId>(args.root)) continue;
      const auto tuples = enumerate_k_tuples(g, root, args.k, mode);
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto sub = extract_rooted_subgraph(g, tuples[t], args.hops);
        DatasetRecord dump{
            sub.local_graph
                .with_id(g.id() + "#r" + std::to_string(root) + "#t" + std::to_string(t))
                .with_features(sub.aug_features),
            std::nullopt};
        auto j = record_to_json(dump);
        j["tuple"] = sub.tuple_positions;
        out << j.dump() << '\n';
        ++dumped;
      }
    }
  }
  std::printf("wrote %zu rooted subgraphs to %s\n", dumped, args.out.c_str());
}

// ---------------------------------------------------------------------------
// augment

struct AugmentArgs {
  std::string in;
  double mu = 0.4;
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 1;
};

void run_augment(const AugmentArgs& args) {
  const auto records = read_dataset(args.in);
  std::vector<DatasetRecord> views(2 * records.size());
  parallel_for(records.size(), args.threads, [&](std::size_t i) {
    const auto [a, b] = make_positive_pair(records[i].graph, args.mu, mix_seed(args.seed, i));
    views[2 * i] = DatasetRecord{a.with_id(a.id() + "#v0"), records[i].split};
    views[2 * i + 1] = DatasetRecord{b.with_id(b.id() + "#v1"), records[i].split};
  });
  write_dataset(views, args.out);
  std::printf("wrote %zu views (2 per graph) to %s\n", views.size(), args.out.c_str());
}

// ---------------------------------------------------------------------------
// metrics

struct MetricsArgs {
  std::string pred;
  std::string in;
  std::string task;
  std::string target;
  std::string out;
};

std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

void run_metrics(const MetricsArgs& args) {
  const bool classification = args.task == "classification";
  if (!classification && args.task != "regression") {
    throw CLI::ValidationError("--task", "expected classification or regression");
  }
  const auto records = read_dataset(args.in);
  auto rows = read_csv_rows(args.pred);
  if (!rows.empty() && rows.front().size() >= 1 && rows.front()[0] == "id") {
    rows.erase(rows.begin());  // header
  }
  std::map<std::string, std::vector<std::string>> by_id;
  for (auto& row : rows) {
    if (row.size() < 2) throw std::runtime_error("prediction rows need id,pred...");
    const std::string id = row.front();
    if (!by_id.emplace(id, std::vector<std::string>(row.begin() + 1, row.end())).second) {
      throw std::runtime_error("duplicate prediction for id " + id);
    }
  }
  MetricsReport report;
  if (classification) {
    std::vector<LabelSet> preds, truths;
    for (const auto& rec : records) {
      const auto it = by_id.find(rec.graph.id());
      if (it == by_id.end()) {
        throw std::runtime_error("missing prediction for id " + rec.graph.id());
      }
      LabelSet pred;
      for (const auto& field : it->second) pred.push_back(std::stoll(field));
      const auto& targets = rec.graph.targets();
      const auto target = targets.find(args.target);
      if (target == targets.end()) {
        throw std::runtime_error("record " + rec.graph.id() + " is missing target \"" +
                                 args.target + "\"");
      }
      LabelSet truth;
      if (std::holds_alternative<std::int64_t>(target->second)) {
        truth.push_back(std::get<std::int64_t>(target->second));
      } else if (std::holds_alternative<std::vector<std::int64_t>>(target->second)) {
        truth = std::get<std::vector<std::int64_t>>(target->second);
      } else {
        throw std::runtime_error("target \"" + args.target + "\" is not discrete");
      }
      preds.push_back(std::move(pred));
      truths.push_back(std::move(truth));
    }
    report = classification_metrics(preds, truths);
  } else {
    std::vector<double> preds, truths;
    for (const auto& rec : records) {
      const auto it = by_id.find(rec.graph.id());
      if (it == by_id.end()) {
        throw std::runtime_error("missing prediction for id " + rec.graph.id());
      }
      if (it->second.size() != 1) {
        throw std::runtime_error("regression predictions need exactly one value per id");
      }
      preds.push_back(std::stod(it->second.front()));
      const auto& targets = rec.graph.targets();
      const auto target = targets.find(args.target);
      if (target == targets.end()) {
        throw std::runtime_error("record " + rec.graph.id() + " is missing target \"" +
                                 args.target + "\"");
      }
      if (std::holds_alternative<std::int64_t>(target->second)) {
        truths.push_back(static_cast<double>(std::get<std::int64_t>(target->second)));
      } else if (std::holds_alternative<double>(target->second)) {
        truths.push_back(std::get<double>(target->second));
      } else {
        throw std::runtime_error("target \"" + args.target + "\" is not numeric");
      }
    }
    report = regression_metrics(preds, truths);
  }
  const auto j = metrics_to_json(report);
  auto out = open_out(args.out);
  out << j.dump(2) << '\n';
  std::printf("%s\n", j.dump().c_str());
}

// ---------------------------------------------------------------------------
// scenario

struct ScenarioArgs {
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t gamma = 0;
  std::string task = "classification";
  std::string target;
  int buckets = 0;
  unsigned threads = 1;
};

TaskKind parse_task(const std::string& task) {
  if (task == "classification") return TaskKind::Classification;
  if (task == "regression") return TaskKind::Regression;
  throw CLI::ValidationError("--task", "expected classification or regression");
}

void run_scenario_noise(const ScenarioArgs& args) {
  auto records = read_dataset(args.in);
  records = inject_edge_noise(std::move(records), args.alpha, args.seed, args.threads);
  write_dataset(records, args.out);
  std::printf("wrote %zu noisy records to %s\n", records.size(), args.out.c_str());
}

void run_scenario_subsample(const ScenarioArgs& args, bool imbalance) {
  const auto records = read_dataset(args.in);
  const TaskKind task = parse_task(args.task);
  SubsampleResult result;
  if (imbalance) {
    result = imbalance_subsample(records, args.beta, args.seed, task, args.target,
                                 args.buckets > 0 ? args.buckets : 3);
  } else {
    result = few_shot_subsample(records, args.gamma, args.seed, task, args.target,
                                args.buckets > 0 ? args.buckets : 5);
  }
  write_dataset(result.records, args.out);
  std::printf("wrote %zu records to %s\n", result.records.size(), args.out.c_str());
  for (const auto& flag : result.flags) std::printf("flag: %s\n", flag.c_str());
}

// ---------------------------------------------------------------------------
// diff

struct DiffArgs {
  std::string in;
  std::string ks = "1";
  std::string out;
  unsigned threads = 1;
};

void run_diff(const DiffArgs& args) {
  const auto ks = parse_int_list(args.ks, "--k");
  const auto records = read_dataset(args.in);
  std::vector<Graph> graphs;
  graphs.reserve(records.size());
  for (const auto& rec : records) graphs.push_back(rec.graph);
  const auto report = differential_report(graphs, ks, args.threads);
  auto out = open_out(args.out);
  write_differential_csv(report, out);
  std::printf("%zu rows, %zu corrected mismatches, %zu literal mismatches -> %s\n",
              report.rows.size(), report.corrected_mismatches(),
              report.literal_mismatches(), args.out.c_str());
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::uint64_t seed = 0;
  std::size_t num = 5000;
  std::string nodes = "15:23";
  double avg_edges = 31.34;
  unsigned threads = 1;
};

void run_bench(const BenchArgs& args) {
  const NodeRange range = parse_node_range(args.nodes);
  using clock = std::chrono::steady_clock;

  const auto gen_start = clock::now();
  std::vector<Graph> graphs(args.num);
  const std::uint64_t graph_stream = mix_seed(args.seed, 0);
  parallel_for(args.num, args.threads, [&](std::size_t i) {
    graphs[i] = gen_random_graph(range, args.avg_edges, mix_seed(graph_stream, i));
  });
  const double gen_seconds =
      std::chrono::duration<double>(clock::now() - gen_start).count();

  const auto label_start = clock::now();
  std::vector<std::int64_t> checksums(args.num);
  parallel_for(args.num, args.threads, [&](std::size_t i) {
    std::int64_t sum = 0;
    for (const auto& [kind, count] : oracle_count_all(graphs[i], kAllSubstructureKinds)) {
      sum += count;
    }
    checksums[i] = sum;
  });
  const double label_seconds =
      std::chrono::duration<double>(clock::now() - label_start).count();

  std::int64_t checksum = 0;
  for (std::int64_t c : checksums) checksum += c;
  std::printf("graphs: %zu, threads: %u\n", args.num, args.threads);
  std::printf("generation: %.3f s\n", gen_seconds);
  std::printf("labeling (13 kinds): %.3f s (%.3f ms/graph)\n", label_seconds,
              1000.0 * label_seconds / static_cast<double>(args.num));
  std::printf("label checksum: %lld\n", static_cast<long long>(checksum));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph substructure counting, augmentation and evaluation toolkit"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a labeled counting dataset");
  gen->add_option("--kinds", gen_args.kinds,
                  "comma-separated substructure kinds, or 'all'");
  gen->add_option("--num", gen_args.num, "number of graphs")->required();
  gen->add_option("--nodes", gen_args.nodes, "node count range MIN:MAX");
  gen->add_option("--avg-edges", gen_args.avg_edges, "target average edge count");
  gen->add_option("--seed", gen_args.seed, "master seed")->required();
  gen->add_option("--split", gen_args.split, "train:valid:test ratio");
  gen->add_option("--out", gen_args.out, "output JSONL file")->required();
  gen->add_option("--threads", gen_args.threads, "worker threads");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "count one substructure kind per graph");
  count->add_option("--in", count_args.in, "input JSONL dataset")->required();
  count->add_option("--kind", count_args.kind, "substructure kind")->required();
  count->add_option("--method", count_args.method, "oracle | mp-corrected | mp-literal");
  count->add_option("--k", count_args.k, "tuple length for mp methods");
  count->add_option("--out", count_args.out, "output CSV (id,count)")->required();
  count->add_option("--threads", count_args.threads, "worker threads");

  TuplesArgs tuples_args;
  auto* tuples = app.add_subcommand("tuples", "dump rooted subgraphs per tuple");
  tuples->add_option("--in", tuples_args.in, "input JSONL dataset")->required();
  tuples->add_option("--k", tuples_args.k, "tuple length")->required();
  tuples->add_option("--L", tuples_args.hops, "neighborhood hops")->required();
  tuples->add_option("--mode", tuples_args.mode, "simple-path | exact-distance");
  tuples->add_option("--out", tuples_args.out, "output JSONL file")->required();
  tuples->add_option("--id", tuples_args.only_id, "restrict to one graph id");
  tuples->add_option("--root", tuples_args.root, "restrict to one root node");

  AugmentArgs augment_args;
  auto* augment = app.add_subcommand("augment", "emit two edge-dropped views per graph");
  augment->add_option("--in", augment_args.in, "input JSONL dataset")->required();
  augment->add_option("--mu", augment_args.mu, "maximum drop probability in [0,1]");
  augment->add_option("--seed", augment_args.seed, "master seed")->required();
  augment->add_option("--out", augment_args.out, "output JSONL file")->required();
  augment->add_option("--threads", augment_args.threads, "worker threads");

  MetricsArgs metrics_args;
  auto* metrics = app.add_subcommand("metrics", "score predictions against a dataset");
  metrics->add_option("--pred", metrics_args.pred, "predictions CSV (id,pred...)")->required();
  metrics->add_option("--in", metrics_args.in, "input JSONL dataset")->required();
  metrics->add_option("--task", metrics_args.task, "classification | regression")->required();
  metrics->add_option("--target", metrics_args.target, "dataset target name")->required();
  metrics->add_option("--out", metrics_args.out, "output metrics JSON")->required();

  ScenarioArgs scenario_args;
  auto* scenario = app.add_subcommand("scenario", "evaluation scenario transforms");
  scenario->require_subcommand(1);
  auto* noise = scenario->add_subcommand("noise", "delete a fixed fraction of edges");
  noise->add_option("--alpha", scenario_args.alpha, "fraction of edges to delete")->required();
  noise->add_option("--seed", scenario_args.seed, "master seed")->required();
  noise->add_option("--in", scenario_args.in, "input JSONL dataset")->required();
  noise->add_option("--out", scenario_args.out, "output JSONL file")->required();
  noise->add_option("--threads", scenario_args.threads, "worker threads");
  auto* imbalance = scenario->add_subcommand("imbalance", "power-law class imbalance");
  imbalance->add_option("--beta", scenario_args.beta, "imbalance exponent >= 0")->required();
  imbalance->add_option("--seed", scenario_args.seed, "master seed")->required();
  imbalance->add_option("--in", scenario_args.in, "input JSONL dataset")->required();
  imbalance->add_option("--out", scenario_args.out, "output JSONL file")->required();
  imbalance->add_option("--task", scenario_args.task, "classification | regression");
  imbalance->add_option("--target", scenario_args.target, "dataset target name")->required();
  imbalance->add_option("--buckets", scenario_args.buckets, "regression buckets (default 3)");
  auto* fewshot = scenario->add_subcommand("fewshot", "keep gamma training samples per class");
  fewshot->add_option("--gamma", scenario_args.gamma, "samples per class/bucket")->required();
  fewshot->add_option("--seed", scenario_args.seed, "master seed")->required();
  fewshot->add_option("--in", scenario_args.in, "input JSONL dataset")->required();
  fewshot->add_option("--out", scenario_args.out, "output JSONL file")->required();
  fewshot->add_option("--task", scenario_args.task, "classification | regression");
  fewshot->add_option("--target", scenario_args.target, "dataset target name")->required();
  fewshot->add_option("--buckets", scenario_args.buckets, "regression buckets (default 5)");

  DiffArgs diff_args;
  auto* diff = app.add_subcommand("diff", "oracle vs message-passing differential report");
  diff->add_option("--in", diff_args.in, "input JSONL dataset")->required();
  diff->add_option("--k", diff_args.ks, "comma-separated tuple lengths");
  diff->add_option("--out", diff_args.out, "output CSV report")->required();
  diff->add_option("--threads", diff_args.threads, "worker threads");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time oracle labeling for all 13 kinds");
  bench->add_option("--seed", bench_args.seed, "master seed")->required();
  bench->add_option("--num", bench_args.num, "number of graphs");
  bench->add_option("--nodes", bench_args.nodes, "node count range MIN:MAX");
  bench->add_option("--avg-edges", bench_args.avg_edges, "target average edge count");
  bench->add_option("--threads", bench_args.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) run_gen(gen_args);
    if (*count) run_count(count_args);
    if (*tuples) run_tuples(tuples_args);
    if (*augment) run_augment(augment_args);
    if (*metrics) run_metrics(metrics_args);
    if (*noise) run_scenario_noise(scenario_args);
    if (*imbalance) run_scenario_subsample(scenario_args, true);
    if (*fewshot) run_scenario_subsample(scenario_args, false);
    if (*diff) run_diff(diff_args);
    if (*bench) run_bench(bench_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
