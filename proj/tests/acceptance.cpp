// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and runtime limits are fixed per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "prank/attributes.hpp"
#include "prank/distance.hpp"
#include "prank/generate.hpp"
#include "prank/learn.hpp"
#include "prank/metrics.hpp"
#include "prank/ranking.hpp"
#include "prank/recreate.hpp"
#include "prank/stats.hpp"

#ifndef PRANK_CLI_PATH
#error "PRANK_CLI_PATH must name the prank executable"
#endif

namespace {

using namespace prank;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

std::string fmt(double x, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << x;
  return s.str();
}

// --- 1 ---------------------------------------------------------------------

Outcome worked_example_rankings() {
  const char* csv =
      "name:categorical,age:continuous,sex:categorical\n"
      "Alice,30,female\nBob,40,male\nCecil,25,male\nDiane,20,female\nEve,35,female\n";
  const AttributeTable people = load_attributes(csv, 5);
  const DistanceSpec spec = make_worked_example_distance(people);
  PriorityRankOptions opt;
  opt.keep_rankings = true;
  const auto res = priority_rank_generate(5, &people, spec, DegreeSpec::constant(2), 1, opt);

  // Parse the dump back: source target distance rank probability.
  std::vector<std::vector<double>> prob(5, std::vector<double>(5, -1.0));
  std::istringstream tsv(format_rankings_tsv(res.rankings));
  std::size_t s, t, rank;
  double dist, p;
  while (tsv >> s >> t >> dist >> rank >> p) prob[s][t] = p;

  enum { alice, bob, cecil, diane, eve };
  struct Row {
    int source, target;
    double expected, printed, tol;
  };
  const double h4 = 1.0 + 1.0 / 2 + 1.0 / 3 + 1.0 / 4;
  const std::vector<Row> rows = {
      {alice, eve, 1.0 / h4, 0.48, 1e-9},         {alice, diane, 0.5 / h4, 0.24, 1e-9},
      {alice, cecil, 1.0 / 3.0 / h4, 0.16, 1e-9}, {alice, bob, 0.25 / h4, 0.12, 1e-9},
      {bob, cecil, 0.3871, 0.39, 1e-4},           {bob, eve, 0.3871, 0.39, 1e-4},
      {bob, alice, 0.1290, 0.13, 1e-4},           {bob, diane, 0.0968, 0.09, 1e-4},
      {cecil, alice, 0.3077, 0.31, 1e-4},         {cecil, bob, 0.3077, 0.31, 1e-4},
      {cecil, diane, 0.3077, 0.31, 1e-4},         {cecil, eve, 0.0769, 0.07, 1e-4},
      {diane, alice, 0.4444, 0.45, 1e-4},         {diane, cecil, 0.2222, 0.22, 1e-4},
      {diane, eve, 0.2222, 0.22, 1e-4},           {diane, bob, 0.1111, 0.11, 1e-4},
      {eve, alice, 0.4444, 0.45, 1e-4},           {eve, bob, 0.2222, 0.22, 1e-4},
      {eve, diane, 0.2222, 0.22, 1e-4},           {eve, cecil, 0.1111, 0.11, 1e-4},
  };
  Outcome o;
  double worst = 0.0, worst_printed = 0.0;
  for (const auto& r : rows) {
    const double got = prob[r.source][r.target];
    const double err = std::abs(got - r.expected);
    const double printed_gap = std::abs(got - r.printed) * 100.0;
    worst = std::max(worst, err);
    worst_printed = std::max(worst_printed, printed_gap);
    if (err > r.tol || printed_gap > 1.1) {
      o.pass = false;
      o.detail += " mismatch(" + std::to_string(r.source) + "->" + std::to_string(r.target) + ": " + fmt(got, 6) + ")";
    }
  }
  o.detail = "max |p - expected| = " + fmt(worst, 3) + ", max gap to printed = " + fmt(worst_printed, 3) +
             " points" + o.detail;
  return o;
}

// --- 2 ---------------------------------------------------------------------

Outcome pmf_law() {
  Outcome o;
  double worst_sum = 0.0;
  for (std::size_t n : {2u, 10u, 100u, 10000u}) {
    std::vector<std::size_t> ranks(n - 1);
    for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = i + 1;
    const auto p = selection_probabilities(ranks);
    double s = 0.0;
    for (double x : p) s += x;
    worst_sum = std::max(worst_sum, std::abs(s - 1.0));
  }
  if (worst_sum > 1e-12) o.pass = false;

  const std::vector<double> dist = {0.0, 5.0, 10.0, 15.0, 20.0};
  const LocalRanking r = build_local_ranking(0, dist);
  std::vector<double> counts(5, 0.0);
  RngStream rng(2024, 0);
  const std::size_t draws = 1'000'000;
  for (std::size_t d = 0; d < draws; ++d) counts[sample_targets(r, 1, rng)[0]] += 1.0;
  const double expected[] = {0.48, 0.24, 0.16, 0.12};
  double worst_freq = 0.0;
  for (std::size_t v = 1; v < 5; ++v) {
    worst_freq = std::max(worst_freq, std::abs(counts[v] / draws - expected[v - 1]));
  }
  if (worst_freq > 0.005) o.pass = false;
  o.detail = "max |sum - 1| = " + fmt(worst_sum, 3) + ", max |freq - p| = " + fmt(worst_freq, 3);
  return o;
}

// --- 3 ---------------------------------------------------------------------

Outcome random_kind_recreates_er() {
  const Graph source = gen_erdos_renyi(50, 0.4, 7);
  const NetworkProfile sp = network_profile(source);
  const DegreeSpec degrees = DegreeSpec::resample(out_degree_sequence(source));
  std::vector<double> pd, pb, pc, rho, len;
  for (std::uint64_t run = 0; run < 20; ++run) {
    const auto res = priority_rank_generate(50, nullptr, DistanceSpec::random(), degrees, 1000 + run);
    const auto cmp = compare_profiles(sp, network_profile(res.graph));
    pd.push_back(cmp.degree.p_value);
    pb.push_back(cmp.betweenness.p_value);
    pc.push_back(cmp.closeness.p_value);
    rho.push_back(cmp.second.density);
    len.push_back(cmp.second.avg_path_length);
  }
  const double rho_err = std::abs(mean(rho) / sp.density - 1.0);
  const double len_err = std::abs(mean(len) / sp.avg_path_length - 1.0);
  Outcome o;
  o.pass = median(pd) > 0.05 && median(pb) > 0.05 && median(pc) > 0.05 && rho_err <= 0.10 && len_err <= 0.10;
  o.detail = "median p_D/p_B/p_C = " + fmt(median(pd), 3) + "/" + fmt(median(pb), 3) + "/" + fmt(median(pc), 3) +
             ", density off by " + fmt(100 * rho_err, 3) + "%, L off by " + fmt(100 * len_err, 3) + "%";
  return o;
}

// --- 4 ---------------------------------------------------------------------

Outcome clustering_triplet() {
  const std::size_t n = 100, k = 4;
  std::vector<double> euclid, degree, random;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    AttributeTable attrs(n);
    RngStream rng(seed, 77);
    Attribute x{"x", AttributeKind::continuous, std::vector<double>(n), {}};
    for (double& v : x.values) v = draw(Uniform{0.0, 1.0}, rng);
    attrs.add_column(std::move(x));
    euclid.push_back(
        transitivity(priority_rank_generate(n, &attrs, DistanceSpec::euclidean1d(0), DegreeSpec::constant(k), seed)
                         .graph));
    degree.push_back(transitivity(
        priority_rank_generate(n, nullptr, DistanceSpec::centrality(DistanceKind::degree), DegreeSpec::constant(k), seed)
            .graph));
    random.push_back(transitivity(
        priority_rank_generate(n, nullptr, DistanceSpec::random(), DegreeSpec::constant(k), seed).graph));
  }
  const double e = mean(euclid), d = mean(degree), r = mean(random);
  Outcome o;
  o.pass = std::abs(e - 0.41) <= 0.10 && std::abs(d - 0.10) <= 0.07 && std::abs(r - 0.06) <= 0.05;
  o.detail = "mean transitivity euclidean1d = " + fmt(e, 3) + " (target 0.41 +- 0.10), degree = " + fmt(d, 3) +
             " (0.10 +- 0.07), random = " + fmt(r, 3) + " (0.06 +- 0.05)";
  return o;
}

// --- 5 ---------------------------------------------------------------------

Outcome dgm_counts() {
  const std::size_t vertices[] = {2, 3, 6, 15, 42, 123};
  const std::size_t edges[] = {1, 3, 9, 27, 81, 243};
  Outcome o;
  std::string seen;
  for (std::size_t s = 0; s <= 5; ++s) {
    const Graph g = gen_dorogovtsev_goltsev_mendes(s);
    const std::size_t undirected = g.num_arcs() / 2;
    seen += (s ? ", " : "") + std::to_string(g.num_vertices()) + "/" + std::to_string(undirected);
    if (g.num_vertices() != vertices[s] || undirected != edges[s] || g.num_arcs() % 2 != 0) o.pass = false;
  }
  o.detail = "|V|/|E| per step: " + seen + "";
  return o;
}

// --- 6 ---------------------------------------------------------------------

Outcome disassortative_runs() {
  std::size_t reached = 0, most_rounds = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto res = gen_disassortative(100, -0.4, 200, seed);
    const auto r = assortativity(symmetrize(res.graph));
    if (res.reached && r && *r < -0.4) ++reached;
    most_rounds = std::max(most_rounds, res.rounds);
  }
  Outcome o;
  o.pass = reached >= 18;
  o.detail = std::to_string(reached) + "/20 runs below -0.4, at most " + std::to_string(most_rounds) + " rounds";
  return o;
}

// --- 7 ---------------------------------------------------------------------

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t bad_graphs = 0;
  double worst_frac = 0.0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    RngStream rng(trial, 7);
    const std::size_t n = 1 + rng.uniform_int(0, 6);
    const Graph g = gen_erdos_renyi(n, rng.uniform(), rng.next());
    const auto ref = oracle::exhaustive_betweenness(g);
    const auto counts = betweenness_centrality(g, BetweennessMode::path_count);
    const auto frac = betweenness_centrality(g, BetweennessMode::fractional);
    bool ok = counts == ref.counts;
    for (std::size_t v = 0; v < n; ++v) {
      const double rel = std::abs(frac[v] - ref.fractions[v]) / std::max(1.0, std::abs(ref.fractions[v]));
      worst_frac = std::max(worst_frac, rel);
      if (rel > 1e-12) ok = false;
    }
    if (!ok) ++bad_graphs;
  }
  if (bad_graphs) o.pass = false;

  double worst_ks = 0.0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    RngStream rng(trial, 8);
    const std::size_t na = 1 + rng.uniform_int(0, 59), nb = 1 + rng.uniform_int(0, 59);
    std::vector<double> a(na), b(nb);
    // Coarse values force ties within and across samples.
    for (double& x : a) x = static_cast<double>(rng.uniform_int(0, 20)) / 4.0;
    for (double& x : b) x = static_cast<double>(rng.uniform_int(0, 24)) / 4.0;
    worst_ks = std::max(worst_ks, std::abs(ks_two_sample(a, b).statistic - oracle::ks_statistic(a, b)));
  }
  if (worst_ks > 1e-12) o.pass = false;

  double worst_normal = 0.0, worst_beta = 0.0;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const std::size_t n = 30;
    const Graph g = gen_erdos_renyi(n, 0.15, trial);
    AttributeTable attrs(n);
    RngStream rng(trial, 9);
    for (int c = 0; c < 3; ++c) {
      Attribute col{"a" + std::to_string(c), AttributeKind::continuous, std::vector<double>(n), {}};
      for (double& v : col.values) v = draw(Normal{0.0, 1.0 + c}, rng);
      attrs.add_column(std::move(col));
    }
    const TrainingSet ts = build_training_set(g, attrs, 1.5, rng);
    const auto fit = fit_linear_regression_distance(ts);
    const auto& beta = std::get<LinearRegressionParams>(fit.spec.params).model.beta;
    Eigen::MatrixXd x(ts.rows(), ts.cols);
    Eigen::VectorXd y(ts.rows());
    for (std::size_t r = 0; r < ts.rows(); ++r) {
      for (std::size_t c = 0; c < ts.cols; ++c) x(r, c) = ts.features[r * ts.cols + c];
      y(r) = 1.0 - ts.labels[r];
    }
    const Eigen::VectorXd ref = oracle::pinv_least_squares(x, y);
    for (std::size_t i = 0; i < beta.size(); ++i) worst_beta = std::max(worst_beta, std::abs(beta[i] - ref(i)));
    worst_normal = std::max(worst_normal, oracle::normal_equation_residual(x, y, beta));
  }
  if (worst_normal > 1e-8 || worst_beta > 1e-8) o.pass = false;
  o.detail = std::to_string(bad_graphs) + "/200 betweenness mismatches (max fractional rel err " +
             fmt(worst_frac, 3) + "), max K-S gap " + fmt(worst_ks, 3) + ", OLS normal-equation residual " +
             fmt(worst_normal, 3) + ", max |beta - pinv beta| " + fmt(worst_beta, 3);
  return o;
}

// --- 8 ---------------------------------------------------------------------

Outcome pipeline_selection() {
  RecreateConfig cfg;
  std::size_t random_wins = 0;
  std::string winners;
  for (std::uint64_t rep = 0; rep < 10; ++rep) {
    cfg.seed = 500 + rep;
    const auto report = recreate(gen_erdos_renyi(50, 0.4, 300 + rep), nullptr, cfg);
    if (report.winner == "random") ++random_wins;
    winners += (rep ? "," : "") + report.winner;
  }

  cfg.seed = 11;
  const auto ba = recreate(gen_barabasi_albert(50, 3, 3, 21), nullptr, cfg);
  const std::size_t ba_passes = ba.finalists.front().degree_passes;

  cfg.seed = 12;
  const auto dgm = recreate(gen_dorogovtsev_goltsev_mendes(4), nullptr, cfg);
  std::string dgm_finalists;
  bool degree_in = false;
  for (const auto& f : dgm.finalists) {
    dgm_finalists += (dgm_finalists.empty() ? "" : ",") + f.name;
    degree_in = degree_in || f.name == "degree";
  }
  Outcome o;
  o.pass = random_wins >= 5 && ba_passes >= 10 && degree_in;
  o.detail = "ER winners [" + winners + "] random " + std::to_string(random_wins) + "/10; BA winner " + ba.winner +
             " passes p_D > 0.05 in " + std::to_string(ba_passes) + "/20; DGM finalists [" + dgm_finalists + "]";
  return o;
}

// --- 9 ---------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "prank_acceptance_cli";
  fs::remove_all(root);
  const std::string cli = PRANK_CLI_PATH;

  struct Command {
    std::string name;
    std::string args;                  // {d} expands to the run directory
    std::vector<std::string> outputs;  // files compared across runs
  };
  const std::vector<Command> commands = {
      {"generate-ba", "generate --model ba --n 60 --k 3 --seed 5 --out {d}/ba.tsv", {"ba.tsv"}},
      {"generate-pr",
       "generate --model priority-rank --n 60 --k 4 --distance euclidean2d --seed 5 --out {d}/pr.tsv "
       "--attrs-out {d}/attrs.csv --dump-rankings {d}/rankings.tsv",
       {"pr.tsv", "attrs.csv", "rankings.tsv"}},
      {"generate-degree",
       "generate --model priority-rank --n 60 --k 4 --distance degree --seed 5 --out {d}/deg.tsv",
       {"deg.tsv"}},
      {"profile", "profile --in {d}/ba.tsv --out {d}/profile.json", {"profile.json"}},
      {"compare", "compare --a {d}/ba.tsv --b {d}/pr.tsv --out {d}/compare.json", {"compare.json"}},
      {"learn-lr", "learn --in {d}/pr.tsv --attrs {d}/attrs.csv --seed 5 --out {d}/lr.json", {"lr.json"}},
      {"learn-nb",
       "learn --in {d}/pr.tsv --attrs {d}/attrs.csv --method naive_bayes --seed 5 --out {d}/nb.json",
       {"nb.json"}},
      {"recreate",
       "recreate --in {d}/ba.tsv --seed 5 --runs 5 --pilot 2 --report {d}/report.json --emit-best {d}/best",
       {"report.json", "best"}},
  };

  const std::vector<std::pair<std::string, unsigned>> runs = {{"w1a", 1}, {"w1b", 1}, {"w4", 4}};
  Outcome o;
  for (const auto& [label, workers] : runs) {
    const fs::path dir = root / label;
    fs::create_directories(dir);
    for (const auto& c : commands) {
      std::string args = c.args;
      for (std::size_t pos; (pos = args.find("{d}")) != std::string::npos;) args.replace(pos, 3, dir.string());
      const std::string cmd = "\"" + cli + "\" --workers " + std::to_string(workers) + " " + args + " 2>/dev/null";
      if (std::system(cmd.c_str()) != 0) {
        o.pass = false;
        o.detail += " [" + c.name + " failed in " + label + "]";
      }
    }
  }
  std::size_t compared = 0;
  for (const auto& c : commands) {
    for (const auto& out : c.outputs) {
      std::vector<fs::path> files;
      if (fs::is_directory(root / "w1a" / out)) {
        for (const auto& e : fs::directory_iterator(root / "w1a" / out)) files.push_back(fs::path(out) / e.path().filename());
        if (files.empty()) o.pass = false;
      } else {
        files.push_back(out);
      }
      for (const auto& f : files) {
        const std::string ref = slurp(root / "w1a" / f);
        ++compared;
        if (ref.empty() || slurp(root / "w1b" / f) != ref || slurp(root / "w4" / f) != ref) {
          o.pass = false;
          o.detail += " [" + f.string() + " differs]";
        }
      }
    }
  }
  o.detail = std::to_string(compared) + " output files compared across two 1-worker runs and one 4-worker run" +
             o.detail;
  fs::remove_all(root);
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked-example rankings", 1.0, worked_example_rankings},
      {2, "rank PMF law", 10.0, pmf_law},
      {3, "random kind re-creates ER(50, 0.4)", 120.0, random_kind_recreates_er},
      {4, "clustering coefficient triplet", 120.0, clustering_triplet},
      {5, "DGM vertex and edge counts", 1.0, dgm_counts},
      {6, "disassortative generator", 60.0, disassortative_runs},
      {7, "oracle equivalence", 60.0, oracle_equivalence},
      {8, "recreate pipeline selection", 600.0, pipeline_selection},
      {9, "CLI determinism", 120.0, cli_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the " + fmt(c.limit_seconds) + " s limit";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s) -- %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
