// prank: command-line front end for the Priority Rank toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal or
// convergence error. Diagnostics go to stderr only.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prank/attributes.hpp"
#include "prank/distance.hpp"
#include "prank/generate.hpp"
#include "prank/graph.hpp"
#include "prank/learn.hpp"
#include "prank/metrics.hpp"
#include "prank/recreate.hpp"
#include "prank/serialize.hpp"

namespace {

using namespace prank;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kInternalError = 3;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_workers() {
  if (const char* env = std::getenv("PRIORITY_RANK_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring PRIORITY_RANK_WORKERS=" << env << "\n";
  }
  return 1;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cerr << "seed: " << s << "\n";
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << text;
}

// Loader errors are prefixed with the offending path.
Graph read_graph(const std::string& path) {
  try {
    return load_edge_list_file(path).graph;
  } catch (const std::exception& e) {
    throw DataError(path + ": " + e.what());
  }
}

AttributeTable read_attributes(const std::string& path, std::size_t rows) {
  try {
    return load_attributes_file(path, rows);
  } catch (const std::exception& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::size_t resolve_column(const AttributeTable& t, const std::string& ref) {
  if (auto c = t.find(ref)) return *c;
  try {
    std::size_t pos = 0;
    const unsigned long idx = std::stoul(ref, &pos);
    if (pos == ref.size() && idx < t.columns()) return idx;
  } catch (const std::exception&) {
  }
  throw DataError("no attribute column `" + ref + "`");
}

void warn_all(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

struct GenerateOptions {
  std::string model = "priority-rank";
  std::size_t n = 100;
  double p = 0.1;
  std::size_t k = 4;
  std::size_t n0 = 0;
  double p_rewire = 0.1;
  double p_burn = 0.3;
  std::size_t ambassadors = 1;
  std::size_t steps = 5;
  std::size_t budget = 10'000'000;
  double threshold = -0.4;
  std::size_t max_rounds = 200;

  std::string distance = "random";
  std::string distance_json;
  bool worked_example = false;
  std::string attrs;
  std::vector<std::string> attribute;
  std::vector<double> weights;
  double mu = 0.0;
  double sigma = 1.0;
  double epsilon = 1e-6;
  bool farness = false;
  double alpha = 0.5;
  std::string class_attr;
  std::string degrees_from;
  std::string reference;
  std::string dump_rankings;

  std::string out = "-";
  std::string attrs_out;
  std::optional<std::uint64_t> seed;
};

DistanceSpec configure_distance(const GenerateOptions& o, const AttributeTable& attrs) {
  if (o.worked_example) return make_worked_example_distance(attrs);
  if (!o.distance_json.empty()) {
    std::ifstream in(o.distance_json);
    if (!in) throw DataError("cannot open " + o.distance_json);
    try {
      return distance_spec_from_json(Json::parse(in));
    } catch (const std::exception& e) {
      throw DataError(o.distance_json + ": " + e.what());
    }
  }
  const DistanceKind kind = distance_kind_from_string(o.distance);
  if (is_learned_kind(kind)) {
    throw DataError("learned distances are fitted with `prank learn` and passed via --distance-json");
  }
  if (kind == DistanceKind::random) return DistanceSpec::random(o.mu, o.sigma);
  if (is_centrality_kind(kind)) return DistanceSpec::centrality(kind, o.epsilon, o.farness);
  if (o.attribute.empty() && o.class_attr.empty() && o.weights.empty()) {
    DistanceSpec spec = default_distance_spec(kind, attrs);
    if (kind == DistanceKind::hierarchical_mix) std::get<HierarchicalParams>(spec.params).alpha = o.alpha;
    return spec;
  }
  std::vector<std::size_t> cols;
  for (const auto& a : o.attribute) cols.push_back(resolve_column(attrs, a));
  switch (kind) {
    case DistanceKind::euclidean1d:
      if (cols.size() != 1) throw DataError("euclidean1d takes exactly one --attribute");
      return DistanceSpec::euclidean1d(cols[0]);
    case DistanceKind::euclidean2d:
      if (cols.size() != 2) throw DataError("euclidean2d takes exactly two --attribute");
      return DistanceSpec::euclidean2d(cols[0], cols[1]);
    case DistanceKind::cosine: return DistanceSpec::cosine(cols);
    case DistanceKind::aggregate: {
      std::vector<double> w = o.weights.empty() ? std::vector<double>(cols.size(), 1.0) : o.weights;
      return DistanceSpec::aggregate(cols, w);
    }
    case DistanceKind::hierarchical_mix: {
      if (o.class_attr.empty()) throw DataError("hierarchical_mix needs --class-attr");
      const std::size_t cc = resolve_column(attrs, o.class_attr);
      std::vector<int> rank(attrs.rows());
      for (std::size_t v = 0; v < attrs.rows(); ++v) rank[v] = static_cast<int>(std::lround(attrs.value(cc, v)));
      return make_hierarchical_mix_distance(o.alpha, std::move(rank), cols);
    }
    default: break;
  }
  throw std::logic_error("unhandled distance kind");
}

bool needs_attributes(const GenerateOptions& o) {
  if (o.worked_example || !o.distance_json.empty()) return true;
  const DistanceKind kind = distance_kind_from_string(o.distance);
  return kind != DistanceKind::random && !is_centrality_kind(kind);
}

int run_generate(const GenerateOptions& o, unsigned workers) {
  const std::uint64_t seed = resolve_seed(o.seed);
  Graph g;
  if (o.model == "er") {
    g = gen_erdos_renyi(o.n, o.p, seed);
  } else if (o.model == "ws") {
    g = gen_watts_strogatz(o.n, o.k, o.p_rewire, seed);
  } else if (o.model == "ba") {
    g = gen_barabasi_albert(o.n, o.k, o.n0, seed);
  } else if (o.model == "ff") {
    g = gen_forest_fire(o.n, o.p_burn, o.ambassadors, seed);
  } else if (o.model == "dgm") {
    g = gen_dorogovtsev_goltsev_mendes(o.steps, o.budget);
  } else if (o.model == "disassortative") {
    auto res = gen_disassortative(o.n, o.threshold, o.max_rounds, seed);
    warn_all(res.warnings);
    g = std::move(res.graph);
  } else {
    std::optional<Graph> reference;
    if (!o.reference.empty()) reference = read_graph(o.reference);
    std::size_t n = o.n;
    if (reference) n = reference->num_vertices();

    AttributeTable attrs;
    const AttributeTable* attrs_ptr = nullptr;
    if (!o.attrs.empty()) {
      attrs = read_attributes(o.attrs, n);
      attrs_ptr = &attrs;
    } else if (needs_attributes(o)) {
      std::cerr << "note: no --attrs given; using synthetic attributes\n";
      attrs = generate_synthetic_attributes(n, RngStream(seed, 1).next());
      attrs_ptr = &attrs;
    }
    const DistanceSpec spec = configure_distance(o, attrs);

    DegreeSpec degrees = DegreeSpec::constant(o.k);
    if (!o.degrees_from.empty()) degrees = DegreeSpec::resample(out_degree_sequence(read_graph(o.degrees_from)));

    Centralities cent;
    PriorityRankOptions opt;
    opt.workers = workers;
    opt.keep_rankings = !o.dump_rankings.empty();
    if (reference) {
      cent = compute_centralities(*reference, workers);
      opt.reference = &cent;
    }
    auto res = priority_rank_generate(n, attrs_ptr, spec, degrees, seed, opt);
    warn_all(res.warnings);
    if (opt.keep_rankings) write_text(o.dump_rankings, format_rankings_tsv(res.rankings));
    if (!o.attrs_out.empty() && attrs_ptr) write_text(o.attrs_out, save_attributes(attrs));
    g = std::move(res.graph);
  }
  write_text(o.out, save_edge_list(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prank: Priority Rank network generation, profiling and re-creation"};
  app.set_help_flag();
  app.set_help_all_flag("-h,--help", "Print help for every subcommand and flag, then exit");
  app.require_subcommand(1);

  unsigned workers = default_workers();
  app.add_option("--workers", workers, "Worker threads (default: $PRIORITY_RANK_WORKERS or 1)")
      ->check(CLI::PositiveNumber);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a network");
  generate->add_option("--model", gen.model, "priority-rank | er | ws | ba | ff | dgm | disassortative")
      ->check(CLI::IsMember({"priority-rank", "er", "ws", "ba", "ff", "dgm", "disassortative"}))
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Number of vertices")->capture_default_str();
  generate->add_option("--p", gen.p, "Arc probability (er)")->capture_default_str();
  generate->add_option("--k", gen.k, "Out-degree (priority-rank), ring neighbors (ws), arcs per arrival (ba)")
      ->capture_default_str();
  generate->add_option("--n0", gen.n0, "Seed clique size (ba; 0 means k)")->capture_default_str();
  generate->add_option("--p-rewire", gen.p_rewire, "Rewiring probability (ws)")->capture_default_str();
  generate->add_option("--p-burn", gen.p_burn, "Burning probability (ff)")->capture_default_str();
  generate->add_option("--ambassadors", gen.ambassadors, "Ambassadors per arrival (ff)")->capture_default_str();
  generate->add_option("--steps", gen.steps, "Iterations (dgm)")->capture_default_str();
  generate->add_option("--budget", gen.budget, "Vertex budget (dgm)")->capture_default_str();
  generate->add_option("--threshold", gen.threshold, "Assortativity stop threshold (disassortative)")
      ->capture_default_str();
  generate->add_option("--max-rounds", gen.max_rounds, "Round limit (disassortative)")->capture_default_str();
  generate->add_option("--distance", gen.distance, "Distance kind (priority-rank)")->capture_default_str();
  generate->add_option("--distance-json", gen.distance_json, "Distance document written by `learn`");
  generate->add_flag("--worked-example", gen.worked_example,
                     "Use |age_i - age_j| + 10 [sex_i != sex_j] over the `age` and `sex` columns");
  generate->add_option("--attrs", gen.attrs, "Vertex attribute CSV");
  generate->add_option("--attribute", gen.attribute, "Attribute column (name or index); repeatable");
  generate->add_option("--weights", gen.weights, "Per-attribute weights (aggregate)");
  generate->add_option("--mu", gen.mu, "Mean (random distance)")->capture_default_str();
  generate->add_option("--sigma", gen.sigma, "Standard deviation (random distance)")->capture_default_str();
  generate->add_option("--epsilon", gen.epsilon, "Offset in 1/(centrality + epsilon)")->capture_default_str();
  generate->add_flag("--farness", gen.farness, "Closeness distance ranks by farness");
  generate->add_option("--alpha", gen.alpha, "Euclidean share (hierarchical_mix)")->capture_default_str();
  generate->add_option("--class-attr", gen.class_attr, "Ordinal class column (hierarchical_mix)");
  generate->add_option("--degrees-from", gen.degrees_from, "Resample out-degrees from this edge list");
  generate->add_option("--reference", gen.reference,
                       "Edge list whose centralities drive centrality distances; sets n");
  generate->add_option("--dump-rankings", gen.dump_rankings, "Write every local ranking as TSV");
  generate->add_option("--out", gen.out, "Output edge list ('-' for stdout)")->capture_default_str();
  generate->add_option("--attrs-out", gen.attrs_out, "Write the attribute table used");
  generate->add_option("--seed", gen.seed, "Master seed (random and printed when absent)");

  std::string profile_in, profile_out = "-";
  bool profile_no_vectors = false;
  auto* profile = app.add_subcommand("profile", "Print a network's statistics as JSON");
  profile->add_option("--in", profile_in, "Edge list")->required();
  profile->add_option("--out", profile_out, "Output JSON ('-' for stdout)")->capture_default_str();
  profile->add_flag("--no-vectors", profile_no_vectors, "Omit per-vertex centrality vectors");

  std::string cmp_a, cmp_b, cmp_out = "-";
  auto* compare = app.add_subcommand("compare", "K-S comparison of two networks' centrality distributions");
  compare->add_option("--a", cmp_a, "First edge list")->required();
  compare->add_option("--b", cmp_b, "Second edge list")->required();
  compare->add_option("--out", cmp_out, "Output JSON ('-' for stdout)")->capture_default_str();

  std::string learn_in, learn_attrs, learn_method = "linear_regression", learn_out = "-";
  double learn_ratio = 1.0;
  bool learn_all_negatives = false;
  std::optional<std::uint64_t> learn_seed;
  auto* learn = app.add_subcommand("learn", "Fit a distance from a network's adjacency");
  learn->add_option("--in", learn_in, "Edge list")->required();
  learn->add_option("--attrs", learn_attrs, "Vertex attribute CSV")->required();
  learn->add_option("--method", learn_method, "linear_regression | naive_bayes")
      ->check(CLI::IsMember({"linear_regression", "naive_bayes"}))
      ->capture_default_str();
  learn->add_option("--negative-ratio", learn_ratio, "Sampled non-arcs per arc")->capture_default_str();
  learn->add_flag("--all-negatives", learn_all_negatives, "Train on every non-arc");
  learn->add_option("--out", learn_out, "Output JSON ('-' for stdout)")->capture_default_str();
  learn->add_option("--seed", learn_seed, "Master seed (random and printed when absent)");

  std::string rec_in, rec_attrs, rec_report = "-", rec_emit;
  RecreateConfig rec;
  std::optional<std::uint64_t> rec_seed;
  auto* recreate_cmd = app.add_subcommand("recreate", "Search distance kinds that re-create a network");
  recreate_cmd->add_option("--in", rec_in, "Source edge list")->required();
  recreate_cmd->add_option("--attrs", rec_attrs, "Vertex attribute CSV (synthesized when absent)");
  recreate_cmd->add_option("--runs", rec.final_runs, "Runs per finalist")->capture_default_str();
  recreate_cmd->add_option("--pilot", rec.pilot_runs, "Pilot runs per candidate")->capture_default_str();
  recreate_cmd->add_option("--finalists", rec.finalists, "Candidates advancing to full runs")
      ->capture_default_str();
  recreate_cmd->add_option("--report", rec_report, "Output JSON ('-' for stdout)")->capture_default_str();
  recreate_cmd->add_option("--emit-best", rec_emit, "Directory for the winner's generated edge lists");
  recreate_cmd->add_option("--seed", rec_seed, "Master seed (random and printed when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*generate) return run_generate(gen, workers);
    if (*profile) {
      const Graph g = read_graph(profile_in);
      write_text(profile_out, dump(to_json(network_profile(g, workers), !profile_no_vectors)));
      return 0;
    }
    if (*compare) {
      const Graph a = read_graph(cmp_a);
      const Graph b = read_graph(cmp_b);
      write_text(cmp_out, dump(to_json(compare_networks(a, b, workers))));
      return 0;
    }
    if (*learn) {
      const std::uint64_t seed = resolve_seed(learn_seed);
      const Graph g = read_graph(learn_in);
      const AttributeTable attrs = read_attributes(learn_attrs, g.num_vertices());
      RngStream rng(seed, 0);
      const TrainingSet ts = build_training_set(g, attrs, learn_ratio, rng, learn_all_negatives);
      const FitResult fit = learn_method == "naive_bayes" ? fit_naive_bayes_distance(ts)
                                                          : fit_linear_regression_distance(ts);
      warn_all(fit.warnings);
      write_text(learn_out, dump(to_json(fit.spec)));
      return 0;
    }
    if (*recreate_cmd) {
      rec.seed = resolve_seed(rec_seed);
      rec.workers = workers;
      rec.keep_winner_graphs = !rec_emit.empty();
      const Graph g = read_graph(rec_in);
      std::optional<AttributeTable> attrs;
      if (!rec_attrs.empty()) attrs = read_attributes(rec_attrs, g.num_vertices());
      const RecreationReport report = recreate(g, attrs ? &*attrs : nullptr, rec);
      for (const auto& c : report.candidates) {
        warn_all(c.warnings);
        if (!c.applicable) std::cerr << "note: skipped " << c.name << ": " << c.reason << "\n";
      }
      write_text(rec_report, dump(to_json(report)));
      if (!rec_emit.empty()) {
        std::filesystem::create_directories(rec_emit);
        for (std::size_t r = 0; r < report.winner_graphs.size(); ++r) {
          std::ostringstream name;
          name << report.winner << "_run" << (r < 10 ? "0" : "") << r << ".tsv";
          write_text((std::filesystem::path(rec_emit) / name.str()).string(), save_edge_list(report.winner_graphs[r]));
        }
      }
      return 0;
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}
