#include "prank/recreate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "prank/generate.hpp"
#include "prank/learn.hpp"
#include "prank/parallel.hpp"

namespace prank {

namespace {

constexpr std::uint64_t kAttributeStream = 1;
constexpr std::uint64_t kFitStream = 2;
constexpr std::uint64_t kPilotStream = 3;
constexpr std::uint64_t kFinalStream = 4;

constexpr DistanceKind kAllKinds[] = {
    DistanceKind::random,          DistanceKind::degree,           DistanceKind::betweenness,
    DistanceKind::closeness,       DistanceKind::pagerank,         DistanceKind::euclidean1d,
    DistanceKind::euclidean2d,     DistanceKind::cosine,           DistanceKind::aggregate,
    DistanceKind::hierarchical_mix, DistanceKind::linear_regression, DistanceKind::naive_bayes,
};

struct Candidate {
  CandidateReport report;
  DistanceSpec spec;
  std::uint64_t stream = 0;
};

std::vector<std::size_t> columns_of_kind(const AttributeTable& t, AttributeKind kind) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < t.columns(); ++c) {
    if (t.column(c).kind == kind) out.push_back(c);
  }
  return out;
}

// Continuous columns first, then ordinal ones.
std::vector<std::size_t> metric_columns(const AttributeTable& t) {
  auto cols = columns_of_kind(t, AttributeKind::continuous);
  const auto ord = columns_of_kind(t, AttributeKind::ordinal);
  cols.insert(cols.end(), ord.begin(), ord.end());
  return cols;
}

DistanceSpec build_spec(DistanceKind kind, const Graph& g, const AttributeTable& attrs, std::uint64_t seed,
                        std::vector<std::string>& warnings) {
  if (!is_learned_kind(kind)) return default_distance_spec(kind, attrs);
  RngStream rng(seed, kFitStream);
  const TrainingSet ts = build_training_set(g, attrs, 1.0, rng);
  FitResult fit = kind == DistanceKind::linear_regression ? fit_linear_regression_distance(ts)
                                                          : fit_naive_bayes_distance(ts);
  warnings.insert(warnings.end(), fit.warnings.begin(), fit.warnings.end());
  return fit.spec;
}

RunRecord score_run(std::uint64_t seed, const NetworkComparison& cmp) {
  RunRecord r;
  r.seed = seed;
  r.degree = cmp.degree;
  r.betweenness = cmp.betweenness;
  r.closeness = cmp.closeness;
  r.combined = cmp.combined_statistic();
  const NetworkProfile& p = cmp.second;
  r.vertices = p.vertices;
  r.arcs = p.arcs;
  r.diameter = p.diameter;
  r.density = p.density;
  r.avg_path_length = p.avg_path_length;
  r.reciprocity = p.reciprocity;
  r.assortativity = p.assortativity;
  r.centralization = p.centralization;
  r.transitivity = p.transitivity;
  return r;
}

struct Job {
  std::size_t candidate;
  std::uint64_t seed;
};

}  // namespace

DistanceSpec default_distance_spec(DistanceKind kind, const AttributeTable& attrs) {
  switch (kind) {
    case DistanceKind::random: return DistanceSpec::random();
    case DistanceKind::degree:
    case DistanceKind::betweenness:
    case DistanceKind::closeness:
    case DistanceKind::pagerank: return DistanceSpec::centrality(kind);
    case DistanceKind::euclidean1d: {
      const auto cols = metric_columns(attrs);
      if (cols.empty()) throw std::invalid_argument("no numeric attribute");
      return DistanceSpec::euclidean1d(cols[0]);
    }
    case DistanceKind::euclidean2d: {
      const auto cols = metric_columns(attrs);
      if (cols.size() < 2) throw std::invalid_argument("fewer than two numeric attributes");
      return DistanceSpec::euclidean2d(cols[0], cols[1]);
    }
    case DistanceKind::cosine: {
      const auto cols = attrs.numeric_columns();
      if (cols.empty()) throw std::invalid_argument("no numeric attribute");
      return DistanceSpec::cosine(cols);
    }
    case DistanceKind::aggregate: {
      if (attrs.columns() == 0) throw std::invalid_argument("no attributes");
      std::vector<std::size_t> cols(attrs.columns());
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      return DistanceSpec::aggregate(cols, std::vector<double>(cols.size(), 1.0));
    }
    case DistanceKind::hierarchical_mix: {
      const auto ord = columns_of_kind(attrs, AttributeKind::ordinal);
      if (ord.empty()) throw std::invalid_argument("no ordinal attribute to order classes");
      std::vector<int> rank(attrs.rows());
      for (std::size_t v = 0; v < attrs.rows(); ++v) rank[v] = static_cast<int>(std::lround(attrs.value(ord[0], v)));
      const auto euclid = columns_of_kind(attrs, AttributeKind::continuous);
      return make_hierarchical_mix_distance(euclid.empty() ? 0.0 : 0.5, std::move(rank), euclid);
    }
    case DistanceKind::linear_regression:
    case DistanceKind::naive_bayes: throw std::invalid_argument("learned distances must be fitted on a graph");
  }
  throw std::logic_error("unhandled distance kind");
}

AttributeTable generate_synthetic_attributes(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("synthetic attributes need n >= 1");
  const RngStream root(seed, 0);
  AttributeTable t(n);

  RngStream rng = root.derive(0);
  std::vector<double> normal(n);
  for (double& x : normal) x = draw(Normal{0.0, 1.0}, rng);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return normal[a] < normal[b]; });
  Attribute ordinal{"ordinal", AttributeKind::ordinal, std::vector<double>(n), {}};
  for (std::size_t r = 0; r < n; ++r) ordinal.values[order[r]] = static_cast<double>(r * 10 / n);
  t.add_column(std::move(ordinal));

  rng = root.derive(1);
  Attribute category{"category", AttributeKind::categorical, std::vector<double>(n), {"c0", "c1", "c2", "c3", "c4"}};
  for (double& x : category.values) x = static_cast<double>(rng.uniform_int(0, 4));
  t.add_column(std::move(category));

  rng = root.derive(2);
  Attribute lognormal{"lognormal", AttributeKind::continuous, std::vector<double>(n), {}};
  for (double& x : lognormal.values) x = draw(LogNormal{0.0, 1.0}, rng);
  t.add_column(std::move(lognormal));

  rng = root.derive(3);
  Attribute exponential{"exponential", AttributeKind::continuous, std::vector<double>(n), {}};
  for (double& x : exponential.values) x = draw(Exponential{1.0}, rng);
  t.add_column(std::move(exponential));
  return t;
}

NetworkComparison compare_profiles(NetworkProfile a, NetworkProfile b) {
  if (a.vertices == 0 || b.vertices == 0) throw std::invalid_argument("compare: both graphs must have vertices");
  NetworkComparison c;
  c.degree = ks_two_sample(a.degree, b.degree);
  c.betweenness = ks_two_sample(a.betweenness, b.betweenness);
  c.closeness = ks_two_sample(a.closeness, b.closeness);
  c.first = std::move(a);
  c.second = std::move(b);
  return c;
}

NetworkComparison compare_networks(const Graph& a, const Graph& b, unsigned workers) {
  if (a.num_vertices() == 0 || b.num_vertices() == 0) {
    throw std::invalid_argument("compare: both graphs must have vertices");
  }
  return compare_profiles(network_profile(a, workers), network_profile(b, workers));
}

Aggregate aggregate(const std::vector<double>& values) {
  Aggregate a;
  a.count = values.size();
  if (values.empty()) return a;
  double s = 0.0;
  for (double v : values) s += v;
  a.mean = s / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - a.mean) * (v - a.mean);
    a.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return a;
}

RecreationReport recreate(const Graph& g, const AttributeTable* attrs, const RecreateConfig& config) {
  const std::size_t n = g.num_vertices();
  if (n < 3) throw std::invalid_argument("recreate needs a graph with at least 3 vertices");
  if (config.pilot_runs < 1 || config.final_runs < 1 || config.finalists < 1) {
    throw std::invalid_argument("recreate: run and finalist counts must be >= 1");
  }
  if (attrs != nullptr && attrs->rows() != n) {
    throw std::invalid_argument("attribute table has " + std::to_string(attrs->rows()) + " rows for " +
                                std::to_string(n) + " vertices");
  }
  const RngStream master(config.seed, 0);
  RecreationReport report;
  report.seed = config.seed;
  report.pilot_runs = config.pilot_runs;
  report.final_runs = config.final_runs;
  report.source = network_profile(g, config.workers);

  AttributeTable synthetic;
  if (attrs == nullptr) {
    synthetic = generate_synthetic_attributes(n, master.derive(kAttributeStream).next());
    attrs = &synthetic;
    report.synthetic_attributes = true;
  }
  const Centralities reference{report.source.degree, report.source.betweenness, report.source.closeness,
                               report.source.farness, report.source.pagerank};
  const DegreeSpec degrees = DegreeSpec::resample(out_degree_sequence(g));

  std::vector<Candidate> candidates;
  for (DistanceKind kind : kAllKinds) {
    Candidate c;
    c.report.name = std::string(to_string(kind));
    c.stream = static_cast<std::uint64_t>(kind);
    try {
      c.spec = build_spec(kind, g, *attrs, config.seed, c.report.warnings);
      validate(c.spec, DistanceContext{n, attrs, &reference, 0});
    } catch (const std::exception& e) {
      c.report.applicable = false;
      c.report.reason = e.what();
    }
    candidates.push_back(std::move(c));
  }

  // Runs are independent; every job writes its own slot.
  auto run_jobs = [&](const std::vector<Job>& jobs, std::vector<Graph>* graphs) {
    std::vector<RunRecord> records(jobs.size());
    if (graphs) graphs->resize(jobs.size());
    parallel_for(jobs.size(), config.workers, [&](std::size_t j) {
      const Candidate& c = candidates[jobs[j].candidate];
      PriorityRankOptions opt;
      opt.reference = &reference;
      auto res = priority_rank_generate(n, attrs, c.spec, degrees, jobs[j].seed, opt);
      records[j] = score_run(jobs[j].seed, compare_profiles(report.source, network_profile(res.graph)));
      if (graphs) (*graphs)[j] = std::move(res.graph);
    });
    return records;
  };

  std::vector<Job> pilot_jobs;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (!candidates[c].report.applicable) continue;
    const RngStream stream = master.derive(kPilotStream).derive(candidates[c].stream);
    for (std::size_t r = 0; r < config.pilot_runs; ++r) pilot_jobs.push_back({c, stream.derive(r).next()});
  }
  const auto pilot = run_jobs(pilot_jobs, nullptr);
  for (std::size_t j = 0; j < pilot_jobs.size(); ++j) candidates[pilot_jobs[j].candidate].report.pilot.push_back(pilot[j]);

  std::vector<std::size_t> ranked;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    auto& rep = candidates[c].report;
    if (!rep.applicable) continue;
    double s = 0.0;
    for (const auto& r : rep.pilot) s += r.combined;
    rep.pilot_score = s / static_cast<double>(rep.pilot.size());
    ranked.push_back(c);
  }
  if (ranked.empty()) throw std::runtime_error("recreate: no applicable distance kind");
  auto better = [&](std::size_t a, std::size_t b, double sa, double sb) {
    return sa != sb ? sa < sb : candidates[a].report.name < candidates[b].report.name;
  };
  std::sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    return better(a, b, candidates[a].report.pilot_score, candidates[b].report.pilot_score);
  });
  ranked.resize(std::min(ranked.size(), config.finalists));

  std::vector<Job> final_jobs;
  for (std::size_t c : ranked) {
    const RngStream stream = master.derive(kFinalStream).derive(candidates[c].stream);
    for (std::size_t r = 0; r < config.final_runs; ++r) final_jobs.push_back({c, stream.derive(r).next()});
  }
  std::vector<Graph> graphs;
  const auto finals = run_jobs(final_jobs, config.keep_winner_graphs ? &graphs : nullptr);

  std::vector<std::size_t> order(ranked.size());
  for (std::size_t f = 0; f < ranked.size(); ++f) {
    FinalistReport fr;
    fr.name = candidates[ranked[f]].report.name;
    fr.runs.assign(finals.begin() + static_cast<std::ptrdiff_t>(f * config.final_runs),
                   finals.begin() + static_cast<std::ptrdiff_t>((f + 1) * config.final_runs));
    std::map<std::string, std::vector<double>> cols;
    for (const auto& r : fr.runs) {
      cols["p_degree"].push_back(r.degree.p_value);
      cols["p_betweenness"].push_back(r.betweenness.p_value);
      cols["p_closeness"].push_back(r.closeness.p_value);
      cols["ks_degree"].push_back(r.degree.statistic);
      cols["ks_betweenness"].push_back(r.betweenness.statistic);
      cols["ks_closeness"].push_back(r.closeness.statistic);
      cols["combined"].push_back(r.combined);
      cols["arcs"].push_back(static_cast<double>(r.arcs));
      cols["diameter"].push_back(static_cast<double>(r.diameter));
      cols["density"].push_back(r.density);
      cols["avg_path_length"].push_back(r.avg_path_length);
      cols["reciprocity"].push_back(r.reciprocity);
      cols["centralization"].push_back(r.centralization);
      cols["transitivity"].push_back(r.transitivity);
      if (r.assortativity) cols["assortativity"].push_back(*r.assortativity);
      if (r.degree.p_value > kSignificance) ++fr.degree_passes;
    }
    for (const auto& [k, v] : cols) fr.aggregates[k] = aggregate(v);
    fr.mean_combined = fr.aggregates["combined"].mean;
    report.finalists.push_back(std::move(fr));
    order[f] = f;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return better(ranked[a], ranked[b], report.finalists[a].mean_combined, report.finalists[b].mean_combined);
  });
  std::vector<FinalistReport> sorted;
  for (std::size_t f : order) sorted.push_back(std::move(report.finalists[f]));
  report.finalists = std::move(sorted);
  report.winner = report.finalists.front().name;
  if (config.keep_winner_graphs) {
    const std::size_t w = order.front();
    for (std::size_t r = 0; r < config.final_runs; ++r) {
      report.winner_graphs.push_back(std::move(graphs[w * config.final_runs + r]));
    }
  }
  for (auto& c : candidates) report.candidates.push_back(std::move(c.report));
  return report;
}

}  // namespace prank
