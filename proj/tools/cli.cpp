#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pairclust/core.hpp"
#include "pairclust/error.hpp"
#include "pairclust/experiment.hpp"
#include "pairclust/gen.hpp"
#include "pairclust/graph.hpp"
#include "pairclust/io.hpp"
#include "pairclust/metrics.hpp"
#include "pairclust/rational.hpp"
#include "pairclust/rgca.hpp"
#include "pairclust/saca.hpp"

namespace pairclust::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 0;

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool pretty = false;
};

void emit_json(Context& ctx, const json& j) { ctx.out << j.dump(ctx.pretty ? 2 : -1) << '\n'; }

// Writes through `write` to `path`, or to the context's output stream when
// the path is empty.
void write_to(Context& ctx, const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(ctx.out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot open " + path + " for writing");
  write(file);
  if (!file) throw Error("failed writing " + path);
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw Error("invalid size list entry '" + token + "'");
    }
  }
  return out;
}

// Accepts either a graph file or a clustering file and returns the
// similarity relation it describes.
SimilarityGraph load_relation(const std::string& path) {
  if (io::detect_kind(path) == io::FileKind::kClustering) return clustering_to_similarity(io::load_clustering(path));
  return io::load_similarity_graph(path);
}

Clustering load_partition(const std::string& path) {
  if (io::detect_kind(path) == io::FileKind::kClustering) return io::load_clustering(path);
  auto c = similarity_is_clustering(io::load_similarity_graph(path));
  if (!c) throw Error(path + " is a graph that is not a disjoint union of cliques");
  return *c;
}

json record_summary_json(const std::vector<GroupSummary>& summary, const std::string& key_name) {
  json rows = json::array();
  for (const auto& s : summary) {
    rows.push_back({{key_name, s.key},
                    {"trials", s.trials},
                    {"mean_er", s.mean_er},
                    {"stddev_er", s.stddev_er},
                    {"violations", s.violations}});
  }
  return rows;
}

// ---------------------------------------------------------------- rgca

struct RgcaArgs {
  std::string input;
  std::string a = "2/3";
  std::string output;
};

void add_rgca(CLI::App& app, RgcaArgs& args) {
  auto* sub = app.add_subcommand("rgca", "Robust greedy clustering of a similarity graph");
  sub->add_option("--input", args.input, "Similarity graph file")->required();
  sub->add_option("--a", args.a, "Distance parameter in [0,1] (p/q or decimal)")->capture_default_str();
  sub->add_option("--output", args.output, "Clustering file (default: stdout)");
}

void run_rgca(Context& ctx, const RgcaArgs& args) {
  SimilarityGraph p = load_relation(args.input);
  Clustering c = rgca(p, Rational::parse(args.a));
  write_to(ctx, args.output, [&](std::ostream& os) { io::write_clustering(os, c); });
}

// ---------------------------------------------------------------- saca

struct SacaArgs {
  std::size_t n = 0;
  std::string pairs;
  std::string output;
};

void add_saca(CLI::App& app, SacaArgs& args) {
  auto* sub = app.add_subcommand("saca", "Agglomerative clustering of a labeled training set");
  sub->add_option("--n", args.n, "Item count")->required();
  sub->add_option("--pairs", args.pairs, "Training set file")->required();
  sub->add_option("--output", args.output, "Clustering file (default: stdout)");
}

void run_saca(Context& ctx, const SacaArgs& args) {
  TrainingSet s = io::load_training_set(args.pairs);
  Clustering c = saca(args.n, s);
  write_to(ctx, args.output, [&](std::ostream& os) { io::write_clustering(os, c); });
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
  bool er = false;
  bool ha = false;
  bool anomalies = false;
  std::string b = "5/6";
  std::vector<std::string> files;
};

void add_metrics(CLI::App& app, MetricsArgs& args) {
  auto* sub = app.add_subcommand("metrics", "Distances between two clusterings or similarity graphs");
  sub->add_flag("--er", args.er, "Misclassification error (both files must describe partitions)");
  sub->add_flag("--ha", args.ha, "Ordered-pair Hamming distance");
  sub->add_flag("--anomalies", args.anomalies, "b-anomalies of the first relation against the second partition");
  sub->add_option("--b", args.b, "Anomaly parameter in [0,1]")->capture_default_str();
  sub->add_option("files", args.files, "FIRST SECOND")->required()->expected(2);
}

void run_metrics(Context& ctx, const MetricsArgs& args) {
  if (!args.er && !args.ha && !args.anomalies) throw CLI::ValidationError("metrics", "choose --er, --ha or --anomalies");
  const std::string& first = args.files[0];
  const std::string& second = args.files[1];
  json j;
  if (args.er) j["er"] = misclassification_error(load_partition(first), load_partition(second));
  if (args.ha) j["ha"] = hamming_distance(load_relation(first), load_relation(second));
  if (args.anomalies) {
    AnomalyReport report = count_anomalies(load_relation(first), load_partition(second), Rational::parse(args.b));
    j["b"] = report.b.to_string();
    j["anomaly_count"] = report.count();
    j["anomalies"] = report.anomalies;
  }
  emit_json(ctx, j);
}

// ---------------------------------------------------------------- resistance

struct ResistanceArgs {
  std::string graph;
  std::string clustering;
  std::size_t dense_limit = ResistanceOptions{}.dense_limit;
};

void add_resistance(CLI::App& app, ResistanceArgs& args) {
  auto* sub = app.add_subcommand("resistance", "Cut-size, resistance-weighted cut-size and the resistance sum");
  sub->add_option("--graph", args.graph, "Side-information graph file")->required();
  sub->add_option("--clustering", args.clustering, "Labeling whose cut is measured");
  sub->add_option("--dense-limit", args.dense_limit, "Largest n solved with a dense factorization")
      ->capture_default_str();
}

void run_resistance(Context& ctx, const ResistanceArgs& args) {
  SideInfoGraph g = io::load_side_info_graph(args.graph);
  ResistanceOptions options;
  options.dense_limit = args.dense_limit;
  std::vector<double> r = edge_resistances(g, options);
  double sum = 0.0;
  for (double x : r) sum += x;
  const double expected = static_cast<double>(g.size() - 1);
  json j;
  j["n"] = g.size();
  j["edges"] = g.edge_count();
  if (!args.clustering.empty()) {
    Clustering y = load_partition(args.clustering);
    if (y.size() != g.size()) throw Error("clustering and graph have different item counts");
    j["phi"] = cut_size(g, y);
    j["phi_r"] = resistance_weighted_cut_size(g, y, r);
  }
  j["sum_r"] = sum;
  j["identity_residual"] = std::abs(sum - expected);
  emit_json(ctx, j);
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  // planted / er
  std::size_t n = 0;
  std::size_t k = 0;
  std::string sizes;
  double p = 0.0;
  // pairs / perturb / adv-t2
  std::string clustering;
  std::uint64_t m = 0;
  std::uint64_t flips = 0;
  std::uint64_t sigma = 0;
  // adv-t4
  std::string graph;
  std::uint64_t b = 0;
  std::string pairs_output;
  std::string summary;
};

struct GenCommands {
  CLI::App* planted = nullptr;
  CLI::App* pairs = nullptr;
  CLI::App* perturb = nullptr;
  CLI::App* adv_t2 = nullptr;
  CLI::App* adv_t4 = nullptr;
  CLI::App* er = nullptr;
};

GenCommands add_gen(CLI::App& app, GenArgs& args) {
  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", args.seed, "Random seed")->capture_default_str();
    sub->add_option("--output", args.output, "Output file (default: stdout)");
  };
  GenCommands cmds;

  cmds.planted = gen->add_subcommand("planted", "Random clustering with given sizes");
  cmds.planted->add_option("--n", args.n, "Item count")->required();
  auto* k_opt = cmds.planted->add_option("--k", args.k, "Balanced cluster count");
  auto* sizes_opt = cmds.planted->add_option("--sizes", args.sizes, "Comma-separated cluster sizes");
  k_opt->excludes(sizes_opt);
  common(cmds.planted);

  cmds.pairs = gen->add_subcommand("pairs", "Uniform labeled training pairs");
  cmds.pairs->add_option("--clustering", args.clustering, "Ground-truth clustering")->required();
  cmds.pairs->add_option("--m", args.m, "Number of pairs")->required();
  common(cmds.pairs);

  cmds.perturb = gen->add_subcommand("perturb", "Clique graph with toggled pairs");
  cmds.perturb->add_option("--clustering", args.clustering, "Ground-truth clustering")->required();
  cmds.perturb->add_option("--flips", args.flips, "Distinct unordered pairs to toggle")->required();
  common(cmds.perturb);

  cmds.adv_t2 = gen->add_subcommand("adv-t2", "Half-split graph within Hamming budget sigma");
  cmds.adv_t2->add_option("--clustering", args.clustering, "Ground-truth clustering")->required();
  cmds.adv_t2->add_option("--sigma", args.sigma, "Hamming budget")->required();
  cmds.adv_t2->add_option("--output", args.output, "Output file (default: stdout)");

  cmds.adv_t4 = gen->add_subcommand("adv-t4", "Randomized labeling with bounded resistance-weighted cut");
  cmds.adv_t4->add_option("--graph", args.graph, "Side-information graph")->required();
  cmds.adv_t4->add_option("--b", args.b, "Cut budget")->required();
  cmds.adv_t4->add_option("--k", args.k, "Class count")->required();
  cmds.adv_t4->add_option("--m", args.m, "Training set size")->required();
  cmds.adv_t4->add_option("--pairs-output", args.pairs_output, "Training set file")->required();
  cmds.adv_t4->add_option("--summary", args.summary, "JSON description of the construction");
  common(cmds.adv_t4);

  cmds.er = gen->add_subcommand("er", "Erdos-Renyi similarity graph");
  cmds.er->add_option("--n", args.n, "Item count")->required();
  cmds.er->add_option("--p", args.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  common(cmds.er);
  return cmds;
}

void run_gen(Context& ctx, const GenCommands& cmds, const GenArgs& args) {
  if (cmds.planted->parsed()) {
    Clustering c = args.sizes.empty()
                       ? planted_clustering_balanced(args.n, args.k == 0 ? 1 : args.k, args.seed)
                       : planted_clustering(args.n, parse_size_list(args.sizes), args.seed);
    write_to(ctx, args.output, [&](std::ostream& os) { io::write_clustering(os, c); });
  } else if (cmds.pairs->parsed()) {
    TrainingSet s = sample_training_set(io::load_clustering(args.clustering), args.m, args.seed);
    write_to(ctx, args.output, [&](std::ostream& os) { io::write_training_set(os, s); });
  } else if (cmds.perturb->parsed()) {
    SimilarityGraph g = perturb_similarity(io::load_clustering(args.clustering), args.flips, args.seed);
    write_to(ctx, args.output, [&](std::ostream& os) { io::write_graph(os, g); });
  } else if (cmds.adv_t2->parsed()) {
    SimilarityGraph g = adversarial_t2(io::load_clustering(args.clustering), args.sigma);
    write_to(ctx, args.output, [&](std::ostream& os) { io::write_graph(os, g); });
  } else if (cmds.adv_t4->parsed()) {
    SideInfoGraph g = io::load_side_info_graph(args.graph);
    AdversarialInstanceT4 inst = adversarial_t4(g, args.b, args.k, args.m, args.seed);
    write_to(ctx, args.output, [&](std::ostream& os) { io::write_clustering(os, inst.y); });
    io::save_training_set(args.pairs_output, inst.s);
    if (!args.summary.empty()) {
      json j;
      j["z"] = inst.z;
      j["z_clamped"] = inst.z_clamped;
      j["block_size"] = inst.block_size;
      j["phi_r"] = inst.phi_r;
      j["v_b"] = inst.v_b;
      j["h_sets"] = inst.h_sets;
      std::ofstream file(args.summary);
      if (!file) throw Error("cannot open " + args.summary + " for writing");
      file << j.dump(ctx.pretty ? 2 : -1) << '\n';
    }
  } else if (cmds.er->parsed()) {
    SimilarityGraph g = erdos_renyi(args.n, args.p, args.seed);
    write_to(ctx, args.output, [&](std::ostream& os) { io::write_graph(os, g); });
  }
}

// ---------------------------------------------------------------- experiment

struct ExperimentArgs {
  std::string mode;
  std::string config;
  std::string format = "csv";
  std::string output;
  bool timing = false;
  bool summary = false;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::string> sizes;
  std::optional<std::string> m_list;
  std::optional<std::string> flips_list;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> a;
  std::optional<std::size_t> threads;
};

void add_experiment(CLI::App& app, ExperimentArgs& args) {
  auto* sub = app.add_subcommand("experiment", "Seeded trial batches; one record per trial");
  sub->add_option("--mode", args.mode, "saca-scaling | rgca-robustness")
      ->required()
      ->check(CLI::IsMember({"saca-scaling", "rgca-robustness"}));
  sub->add_option("--config", args.config, "JSON config; flags override its fields");
  sub->add_option("--format", args.format, "csv | jsonl")->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();
  sub->add_option("--output", args.output, "Record file (default: stdout)");
  sub->add_flag("--timing", args.timing, "Add per-trial runtime_ms (not replayable)");
  sub->add_flag("--summary", args.summary, "Print per-group mean/stddev to stderr");
  sub->add_option("--n", args.n, "Item count");
  sub->add_option("--k", args.k, "Balanced cluster count");
  sub->add_option("--sizes", args.sizes, "Comma-separated cluster sizes");
  sub->add_option("--m-list", args.m_list, "Comma-separated training set sizes");
  sub->add_option("--flips-list", args.flips_list, "Comma-separated flip counts");
  sub->add_option("--trials", args.trials, "Trials per group");
  sub->add_option("--seed", args.seed, "Batch seed (default 0)");
  sub->add_option("--a", args.a, "RGCA distance parameter");
  sub->add_option("--threads", args.threads, "Worker cap (default: PAIRCLUST_THREADS or hardware)");
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream file(path);
  if (!file) throw Error("cannot open " + path);
  try {
    json j = json::parse(file);
    if (!j.is_object()) throw Error(path + ": config must be a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

template <typename T>
T config_get(const json& cfg, const char* key, T fallback) {
  if (!cfg.contains(key)) return fallback;
  try {
    return cfg.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(std::string("config field '") + key + "': " + e.what());
  }
}

std::vector<std::uint64_t> to_u64(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

void run_experiment(Context& ctx, const ExperimentArgs& args) {
  const json cfg = load_config(args.config);
  std::vector<ExperimentRecord> records;
  std::string key_name;
  if (args.mode == "saca-scaling") {
    SacaScalingConfig c;
    c.n = args.n.value_or(config_get(cfg, "n", c.n));
    c.k = args.k.value_or(config_get(cfg, "k", c.k));
    c.sizes = args.sizes ? parse_size_list(*args.sizes) : config_get(cfg, "sizes", c.sizes);
    c.m_list = args.m_list ? to_u64(parse_size_list(*args.m_list)) : config_get(cfg, "m_list", c.m_list);
    c.trials = args.trials.value_or(config_get(cfg, "trials", c.trials));
    c.seed = args.seed.value_or(config_get(cfg, "seed", c.seed));
    c.threads = args.threads.value_or(config_get(cfg, "threads", c.threads));
    records = run_saca_scaling(c);
    key_name = "m";
  } else {
    RgcaRobustnessConfig c;
    c.n = args.n.value_or(config_get(cfg, "n", c.n));
    c.k = args.k.value_or(config_get(cfg, "k", c.k));
    c.sizes = args.sizes ? parse_size_list(*args.sizes) : config_get(cfg, "sizes", c.sizes);
    c.flips_list =
        args.flips_list ? to_u64(parse_size_list(*args.flips_list)) : config_get(cfg, "flips_list", c.flips_list);
    c.trials = args.trials.value_or(config_get(cfg, "trials", c.trials));
    c.seed = args.seed.value_or(config_get(cfg, "seed", c.seed));
    c.threads = args.threads.value_or(config_get(cfg, "threads", c.threads));
    if (args.a) {
      c.a = Rational::parse(*args.a);
    } else if (cfg.contains("a")) {
      c.a = cfg.at("a").is_string() ? Rational::parse(cfg.at("a").get<std::string>())
                                    : Rational::parse(cfg.at("a").dump());
    }
    records = run_rgca_robustness(c);
    key_name = "flips";
  }
  OutputOptions options;
  options.include_timing = args.timing;
  write_to(ctx, args.output, [&](std::ostream& os) {
    if (args.format == "csv") {
      write_csv(os, records, options);
    } else {
      write_jsonl(os, records, options);
    }
  });
  if (args.summary) ctx.err << record_summary_json(summarize(records), key_name).dump(ctx.pretty ? 2 : -1) << '\n';
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairwise clustering toolkit", "pairclust"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, err};
  app.add_flag("--json", ctx.pretty, "Pretty-print JSON output");

  RgcaArgs rgca_args;
  SacaArgs saca_args;
  MetricsArgs metrics_args;
  ResistanceArgs resistance_args;
  GenArgs gen_args;
  ExperimentArgs experiment_args;
  add_rgca(app, rgca_args);
  add_saca(app, saca_args);
  add_metrics(app, metrics_args);
  add_resistance(app, resistance_args);
  GenCommands gen_cmds = add_gen(app, gen_args);
  add_experiment(app, experiment_args);

  try {
    app.parse(argc, argv);
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "rgca") run_rgca(ctx, rgca_args);
    if (name == "saca") run_saca(ctx, saca_args);
    if (name == "metrics") run_metrics(ctx, metrics_args);
    if (name == "resistance") run_resistance(ctx, resistance_args);
    if (name == "gen") run_gen(ctx, gen_cmds, gen_args);
    if (name == "experiment") run_experiment(ctx, experiment_args);
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int dispatch(int argc, char** argv) { return dispatch(argc, argv, std::cout, std::cerr); }

}  // namespace pairclust::cli
