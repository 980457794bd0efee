#include "prank/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "prank/metrics.hpp"
#include "prank/parallel.hpp"
#include "prank/stats.hpp"

namespace prank {

namespace {

// Child stream ids under a pass root.
constexpr std::uint64_t kDegreeStream = 0x100;
constexpr std::uint64_t kSampleStream = 0x200;
constexpr std::uint64_t kDistanceStream = 0x300;

std::uint64_t pair_key(VertexId a, VertexId b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

std::vector<std::size_t> draw_out_degrees(std::size_t n, const DegreeSpec& spec, std::uint64_t seed,
                                          std::vector<std::string>& warnings) {
  std::vector<std::size_t> k(n);
  if (spec.mode == DegreeSpec::Mode::constant) {
    if (spec.k < 1) throw std::invalid_argument("constant out-degree must be >= 1");
    if (spec.k > n - 1) {
      throw std::invalid_argument("constant out-degree " + std::to_string(spec.k) + " exceeds n-1 = " +
                                  std::to_string(n - 1));
    }
    std::fill(k.begin(), k.end(), spec.k);
    return k;
  }
  if (spec.source_degrees.empty()) throw std::invalid_argument("resampled out-degrees need a non-empty source");
  RngStream rng(seed, kDegreeStream);
  std::size_t clamped = 0;
  for (auto& d : k) {
    d = spec.source_degrees[rng.uniform_int(0, spec.source_degrees.size() - 1)];
    if (d > n - 1) {
      d = n - 1;
      ++clamped;
    }
  }
  if (clamped > 0) {
    warnings.push_back(std::to_string(clamped) + " resampled out-degree(s) clamped to n-1 = " +
                       std::to_string(n - 1));
  }
  return k;
}

struct Pass {
  Graph graph;
  std::vector<LocalRanking> rankings;
};

Pass run_pass(std::size_t n, const AttributeTable* attrs, const DistanceSpec& spec, const Centralities* cent,
              std::span<const std::size_t> out_degrees, const RngStream& root, unsigned workers, bool keep) {
  DistanceContext ctx{n, attrs, cent, root.derive(kDistanceStream).next()};
  validate(spec, ctx);
  const RngStream sample_root = root.derive(kSampleStream);
  std::vector<std::vector<Arc>> arcs(n);
  std::vector<LocalRanking> rankings(keep ? n : 0);
  parallel_for(n, workers, [&](std::size_t i) {
    const auto src = static_cast<VertexId>(i);
    std::vector<double> row(n);
    distances_from(spec, ctx, src, row);
    LocalRanking r = build_local_ranking(src, row);
    RngStream rng = sample_root.derive(i);
    for (VertexId t : sample_targets(r, out_degrees[i], rng)) arcs[i].push_back({src, t});
    if (keep) rankings[i] = std::move(r);
  });
  std::vector<Arc> all;
  for (auto& a : arcs) all.insert(all.end(), a.begin(), a.end());
  return {Graph::from_arcs(n, all), std::move(rankings)};
}

}  // namespace

/*
  Centrality kinds rank against a graph. With no reference graph supplied,
  a random-kind bootstrap graph with the same out-degrees provides the first
  centralities. The network generated from those is a refinement step whose
  own centralities drive the final pass. Each pass has its own derived stream.
*/
PriorityRankResult priority_rank_generate(std::size_t n, const AttributeTable* attrs, const DistanceSpec& spec,
                                          const DegreeSpec& degrees, std::uint64_t seed,
                                          const PriorityRankOptions& options) {
  if (n < 2) throw std::invalid_argument("priority rank generation needs n >= 2");
  PriorityRankResult out;
  out.out_degrees = draw_out_degrees(n, degrees, seed, out.warnings);
  const RngStream master(seed, 0);

  if (!is_centrality_kind(spec.kind) || options.reference != nullptr) {
    Pass p = run_pass(n, attrs, spec, options.reference, out.out_degrees, master.derive(0), options.workers,
                      options.keep_rankings);
    out.graph = std::move(p.graph);
    out.rankings = std::move(p.rankings);
    return out;
  }
  Pass boot = run_pass(n, attrs, DistanceSpec::random(), nullptr, out.out_degrees, master.derive(1),
                       options.workers, false);
  Centralities cent = compute_centralities(boot.graph, options.workers);
  Pass refine = run_pass(n, attrs, spec, &cent, out.out_degrees, master.derive(2), options.workers, false);
  cent = compute_centralities(refine.graph, options.workers);
  Pass final_pass = run_pass(n, attrs, spec, &cent, out.out_degrees, master.derive(3), options.workers,
                             options.keep_rankings);
  out.graph = std::move(final_pass.graph);
  out.rankings = std::move(final_pass.rankings);
  return out;
}

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos-renyi: p must be in [0, 1]");
  RngStream rng(seed, 0);
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = 0; j < n; ++j) {
      if (i != j && rng.uniform() < p) arcs.push_back({i, j});
    }
  }
  return Graph::from_arcs(n, arcs);
}

Graph gen_watts_strogatz(std::size_t n, std::size_t k_neighbors, double p_rewire, std::uint64_t seed) {
  if (k_neighbors < 1) throw std::invalid_argument("watts-strogatz: k must be >= 1");
  if (n <= 2 * k_neighbors) throw std::invalid_argument("watts-strogatz: n must exceed 2k");
  if (!(p_rewire >= 0.0 && p_rewire <= 1.0)) throw std::invalid_argument("watts-strogatz: p must be in [0, 1]");
  RngStream rng(seed, 0);
  std::vector<Arc> arcs;
  std::unordered_set<std::uint64_t> present;
  for (VertexId i = 0; i < n; ++i) {
    for (std::size_t o = 1; o <= k_neighbors; ++o) {
      const auto j = static_cast<VertexId>((i + o) % n);
      arcs.push_back({i, j});
      present.insert(pair_key(i, j));
    }
  }
  std::vector<VertexId> candidates;
  for (Arc& a : arcs) {
    if (rng.uniform() >= p_rewire) continue;
    // Valid new heads: no self-loop and no arc between the pair either way.
    candidates.clear();
    for (VertexId t = 0; t < n; ++t) {
      if (t != a.src && !present.count(pair_key(a.src, t)) && !present.count(pair_key(t, a.src))) {
        candidates.push_back(t);
      }
    }
    if (candidates.empty()) continue;
    const VertexId t = candidates[rng.uniform_int(0, candidates.size() - 1)];
    present.erase(pair_key(a.src, a.dst));
    a.dst = t;
    present.insert(pair_key(a.src, t));
  }
  return Graph::from_arcs(n, arcs);
}

Graph gen_barabasi_albert(std::size_t n, std::size_t k, std::size_t n0, std::uint64_t seed) {
  if (n0 == 0) n0 = k;
  if (k < 1 || n0 < k) throw std::invalid_argument("barabasi-albert: need n0 >= k >= 1");
  if (n <= n0) throw std::invalid_argument("barabasi-albert: need n > n0");
  RngStream rng(seed, 0);
  std::vector<Arc> arcs;
  // Each arc endpoint appears once per unit of total degree.
  std::vector<VertexId> endpoints;
  for (VertexId i = 0; i < n0; ++i) {
    for (VertexId j = 0; j < n0; ++j) {
      if (i == j) continue;
      arcs.push_back({i, j});
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }
  std::vector<VertexId> chosen;
  for (auto v = static_cast<VertexId>(n0); v < n; ++v) {
    chosen.clear();
    while (chosen.size() < k) {
      const VertexId t = endpoints.empty() ? static_cast<VertexId>(rng.uniform_int(0, v - 1))
                                           : endpoints[rng.uniform_int(0, endpoints.size() - 1)];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    for (VertexId t : chosen) {
      arcs.push_back({v, t});
      arcs.push_back({t, v});
      for (int rep = 0; rep < 2; ++rep) {
        endpoints.push_back(v);
        endpoints.push_back(t);
      }
    }
  }
  return Graph::from_arcs(n, arcs);
}

Graph gen_forest_fire(std::size_t n, double p_burn, std::size_t ambassadors, std::uint64_t seed) {
  if (!(p_burn >= 0.0 && p_burn < 1.0)) throw std::invalid_argument("forest fire: p_burn must be in [0, 1)");
  if (ambassadors < 1) throw std::invalid_argument("forest fire: ambassadors must be >= 1");
  RngStream rng(seed, 0);
  std::vector<std::vector<VertexId>> out(n);
  std::vector<std::uint32_t> visited(n, 0);  // arrival stamp
  std::vector<VertexId> queue;
  std::vector<Arc> arcs;
  for (VertexId v = 1; v < n; ++v) {
    queue.clear();
    visited[v] = v;
    const std::size_t want = std::min<std::size_t>(ambassadors, v);
    while (queue.size() < want) {
      const auto a = static_cast<VertexId>(rng.uniform_int(0, v - 1));
      if (visited[a] == v) continue;
      visited[a] = v;
      queue.push_back(a);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId w = queue[head];
      for (VertexId x : out[w]) {
        if (visited[x] == v) continue;
        if (rng.uniform() < p_burn) {
          visited[x] = v;
          queue.push_back(x);
        }
      }
    }
    for (VertexId t : queue) arcs.push_back({v, t});
    out[v] = queue;
  }
  return Graph::from_arcs(n, arcs);
}

Graph gen_dorogovtsev_goltsev_mendes(std::size_t steps, std::size_t vertex_budget) {
  std::size_t v = 2, e = 1;
  for (std::size_t s = 0; s < steps; ++s) {
    if (e > vertex_budget || v + e > vertex_budget) {
      throw std::invalid_argument("dgm: " + std::to_string(steps) + " steps exceed the vertex budget of " +
                                  std::to_string(vertex_budget));
    }
    v += e;
    e *= 3;
  }
  std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}};
  VertexId next = 2;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t existing = edges.size();
    for (std::size_t k = 0; k < existing; ++k) {
      const auto [a, b] = edges[k];
      edges.push_back({next, a});
      edges.push_back({next, b});
      ++next;
    }
  }
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    arcs.push_back({a, b});
    arcs.push_back({b, a});
  }
  return Graph::from_arcs(v, arcs);
}

DisassortativeResult gen_disassortative(std::size_t n, double stop_threshold, std::size_t max_rounds,
                                        std::uint64_t seed) {
  if (n < 10) throw std::invalid_argument("disassortative: n must be >= 10");
  if (!(stop_threshold < 0.0)) throw std::invalid_argument("disassortative: stop threshold must be < 0");
  if (max_rounds < 1) throw std::invalid_argument("disassortative: max_rounds must be >= 1");
  const std::size_t hubs = n / 10, middle = n / 2, tail_begin = n / 2;
  const auto scaled = [n](double per_hundred) {
    return static_cast<std::size_t>(std::lround(per_hundred * static_cast<double>(n) / 100.0));
  };
  const std::size_t hub_lo = std::min(scaled(30), n - tail_begin), hub_hi = std::min(scaled(40), n - tail_begin);
  const std::size_t mid_hi = scaled(15);

  DisassortativeResult res;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    RngStream rng = RngStream(seed, 0).derive(round);
    std::vector<Arc> drawn;
    auto emit = [&](VertexId src, std::size_t count, std::size_t lo, std::size_t hi) {
      for (std::size_t c = 0; c < count; ++c) drawn.push_back({src, static_cast<VertexId>(rng.uniform_int(lo, hi))});
    };
    for (VertexId v = 0; v < hubs; ++v) emit(v, rng.uniform_int(hub_lo, hub_hi), tail_begin, n - 1);
    for (auto v = static_cast<VertexId>(hubs); v < middle; ++v) emit(v, rng.uniform_int(0, mid_hi), 0, n - 1);
    for (auto v = static_cast<VertexId>(tail_begin); v < n; ++v) emit(v, rng.uniform_int(0, 2), 0, n - 1);
    // One stored arc per unordered pair: the first drawn orientation wins.
    std::unordered_set<std::uint64_t> pairs;
    std::vector<Arc> kept;
    for (const Arc& a : drawn) {
      if (a.src == a.dst) continue;
      if (pairs.insert(pair_key(std::min(a.src, a.dst), std::max(a.src, a.dst))).second) kept.push_back(a);
    }
    res.graph = Graph::from_arcs(n, kept);
    res.rounds = round + 1;
    const auto r = assortativity(symmetrize(res.graph));
    res.assortativity = r.value_or(0.0);
    if (r && *r < stop_threshold) {
      res.reached = true;
      return res;
    }
  }
  res.warnings.push_back("disassortative: assortativity " + std::to_string(res.assortativity) +
                         " did not fall below " + std::to_string(stop_threshold) + " within " +
                         std::to_string(max_rounds) + " rounds");
  return res;
}

}  // namespace prank
