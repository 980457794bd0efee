#include "prank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "prank/parallel.hpp"

namespace prank {

namespace {

constexpr std::uint32_t kInf = ShortestPathSummary::unreachable;

// Sources are reduced in fixed-size blocks so floating-point sums come out
// the same for every worker count.
constexpr std::size_t kBlock = 32;

// Single-source BFS with shortest-path counts; reusable scratch space.
struct Bfs {
  std::vector<std::uint32_t> dist;
  std::vector<double> sigma;
  std::vector<VertexId> order;

  explicit Bfs(std::size_t n) : dist(n, kInf), sigma(n, 0.0) { order.reserve(n); }

  void run(const Graph& g, VertexId s) {
    for (VertexId v : order) {
      dist[v] = kInf;
      sigma[v] = 0.0;
    }
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const VertexId v = order[head];
      for (VertexId w : g.out_neighbors(v)) {
        if (dist[w] == kInf) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
  }
};

// Adds the dependency of source s on every vertex into `out`.
void accumulate_dependency(const Graph& g, const Bfs& bfs, BetweennessMode mode, std::vector<double>& scratch,
                           std::vector<double>& out) {
  for (VertexId v : bfs.order) scratch[v] = 0.0;
  for (std::size_t k = bfs.order.size(); k-- > 1;) {
    const VertexId w = bfs.order[k];
    for (VertexId v : g.in_neighbors(w)) {
      if (bfs.dist[v] == kInf || bfs.dist[v] + 1 != bfs.dist[w]) continue;
      if (mode == BetweennessMode::fractional) {
        scratch[v] += bfs.sigma[v] / bfs.sigma[w] * (1.0 + scratch[w]);
      } else {
        // Number of shortest-path DAG continuations below v.
        scratch[v] += 1.0 + scratch[w];
      }
    }
    if (mode == BetweennessMode::fractional) {
      out[w] += scratch[w];
    } else {
      out[w] += bfs.sigma[w] * scratch[w];
    }
  }
}

}  // namespace

ShortestPathSummary shortest_paths(const Graph& g) {
  const std::size_t n = g.num_vertices();
  ShortestPathSummary sp;
  sp.n = n;
  sp.dist.assign(n * n, kInf);
  sp.sigma.assign(n * n, 0.0);
  Bfs bfs(n);
  for (VertexId s = 0; s < n; ++s) {
    bfs.run(g, s);
    for (VertexId v : bfs.order) {
      sp.dist[s * n + v] = bfs.dist[v];
      sp.sigma[s * n + v] = bfs.sigma[v];
    }
  }
  return sp;
}

std::vector<double> degree_centrality(const Graph& g, Direction direction) {
  std::vector<double> c(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    switch (direction) {
      case Direction::in: c[v] = static_cast<double>(g.in_degree(v)); break;
      case Direction::out: c[v] = static_cast<double>(g.out_degree(v)); break;
      case Direction::total: c[v] = static_cast<double>(g.in_degree(v) + g.out_degree(v)); break;
    }
  }
  return c;
}

std::vector<double> betweenness_centrality(const Graph& g, BetweennessMode mode, unsigned workers) {
  const std::size_t n = g.num_vertices();
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::vector<double>> partial(blocks);
  parallel_for(blocks, workers, [&](std::size_t b) {
    Bfs bfs(n);
    std::vector<double> scratch(n, 0.0);
    std::vector<double> acc(n, 0.0);
    for (std::size_t s = b * kBlock; s < std::min(n, (b + 1) * kBlock); ++s) {
      bfs.run(g, static_cast<VertexId>(s));
      accumulate_dependency(g, bfs, mode, scratch, acc);
    }
    partial[b] = std::move(acc);
  });
  std::vector<double> out(n, 0.0);
  for (const auto& p : partial) {
    for (std::size_t v = 0; v < n; ++v) out[v] += p[v];
  }
  return out;
}

std::vector<double> closeness_centrality(const Graph& g, ClosenessMode mode, unsigned workers) {
  const std::size_t n = g.num_vertices();
  std::vector<double> out(n, 0.0);
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  parallel_for(blocks, workers, [&](std::size_t b) {
    Bfs bfs(n);
    for (std::size_t s = b * kBlock; s < std::min(n, (b + 1) * kBlock); ++s) {
      bfs.run(g, static_cast<VertexId>(s));
      std::uint64_t total = 0;
      for (VertexId v : bfs.order) total += bfs.dist[v];
      if (mode == ClosenessMode::farness) {
        out[s] = static_cast<double>(total) / static_cast<double>(n);
      } else {
        out[s] = total == 0 ? 0.0 : static_cast<double>(bfs.order.size() - 1) / static_cast<double>(total);
      }
    }
  });
  return out;
}

std::vector<double> pagerank_centrality(const Graph& g, double damping, double tol, std::size_t max_iter) {
  if (!(damping > 0.0 && damping < 1.0)) throw std::invalid_argument("pagerank: damping must be in (0, 1)");
  if (!(tol > 0.0)) throw std::invalid_argument("pagerank: tol must be > 0");
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, inv_n), next(n);
  double residual = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    double dangling = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      if (g.out_degree(v) == 0) dangling += rank[v];
    }
    const double base = (1.0 - damping) * inv_n + damping * dangling * inv_n;
    for (VertexId v = 0; v < n; ++v) {
      double s = 0.0;
      for (VertexId u : g.in_neighbors(v)) s += rank[u] / static_cast<double>(g.out_degree(u));
      next[v] = base + damping * s;
    }
    residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) residual += std::abs(next[v] - rank[v]);
    rank.swap(next);
    if (residual < tol) return rank;
  }
  throw ConvergenceError("pagerank did not converge after " + std::to_string(max_iter) +
                             " iterations (residual " + std::to_string(residual) + ")",
                         residual);
}

PathLengthStats path_length_stats(const Graph& g, unsigned workers) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> sum(n, 0), pairs(n, 0), longest(n, 0);
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  parallel_for(blocks, workers, [&](std::size_t b) {
    Bfs bfs(n);
    for (std::size_t s = b * kBlock; s < std::min(n, (b + 1) * kBlock); ++s) {
      bfs.run(g, static_cast<VertexId>(s));
      for (VertexId v : bfs.order) {
        sum[s] += bfs.dist[v];
        longest[s] = std::max<std::uint64_t>(longest[s], bfs.dist[v]);
      }
      pairs[s] = bfs.order.size() - 1;
    }
  });
  PathLengthStats st;
  const std::uint64_t total = std::accumulate(sum.begin(), sum.end(), std::uint64_t{0});
  st.connected_pairs = std::accumulate(pairs.begin(), pairs.end(), std::size_t{0});
  st.diameter = n ? *std::max_element(longest.begin(), longest.end()) : 0;
  st.average = st.connected_pairs ? static_cast<double>(total) / static_cast<double>(st.connected_pairs) : 0.0;
  return st;
}

std::size_t diameter(const Graph& g) { return path_length_stats(g).diameter; }
double avg_path_length(const Graph& g) { return path_length_stats(g).average; }

double density(const Graph& g) {
  const double n = static_cast<double>(g.num_vertices());
  if (g.num_vertices() < 2) throw std::invalid_argument("density: requires n >= 2");
  return static_cast<double>(g.num_arcs()) / (n * (n - 1.0));
}

double reciprocity(const Graph& g) {
  if (g.num_arcs() == 0) return 0.0;
  std::size_t mutual = 0;
  for (const Arc& a : g.arcs()) {
    if (g.has_arc(a.dst, a.src)) ++mutual;
  }
  return static_cast<double>(mutual) / static_cast<double>(g.num_arcs());
}

std::optional<double> assortativity(const Graph& g) {
  if (g.num_arcs() == 0) return std::nullopt;
  const auto deg = degree_centrality(g, Direction::total);
  const double m = static_cast<double>(g.num_arcs());
  double mx = 0, my = 0;
  for (const Arc& a : g.arcs()) {
    mx += deg[a.src];
    my += deg[a.dst];
  }
  mx /= m;
  my /= m;
  double sxy = 0, sxx = 0, syy = 0;
  for (const Arc& a : g.arcs()) {
    const double dx = deg[a.src] - mx;
    const double dy = deg[a.dst] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  // Degrees are integers, so exact zero variance shows up as (near) zero sums.
  if (sxx <= 1e-12 * m || syy <= 1e-12 * m) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

double freeman_centralization(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 3) return 0.0;
  const auto deg = degree_centrality(g, Direction::total);
  const double top = *std::max_element(deg.begin(), deg.end());
  double sum = 0.0;
  for (double d : deg) sum += top - d;
  const double nn = static_cast<double>(n);
  return sum / (2.0 * (nn - 1.0) * (nn - 2.0));
}

double transitivity(const Graph& g) {
  const Graph u = symmetrize(g);
  const std::size_t n = u.num_vertices();
  std::vector<char> mark(n, 0);
  double closed = 0.0, triples = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    const auto nb = u.out_neighbors(v);
    const double d = static_cast<double>(nb.size());
    triples += d * (d - 1.0) / 2.0;
    for (VertexId w : nb) mark[w] = 1;
    for (VertexId w : nb) {
      for (VertexId x : u.out_neighbors(w)) {
        if (x > w && mark[x]) closed += 1.0;
      }
    }
    for (VertexId w : nb) mark[w] = 0;
  }
  return triples > 0 ? closed / triples : 0.0;
}

NetworkProfile network_profile(const Graph& g, unsigned workers) {
  NetworkProfile p;
  p.vertices = g.num_vertices();
  p.arcs = g.num_arcs();
  const auto paths = path_length_stats(g, workers);
  p.diameter = paths.diameter;
  p.avg_path_length = paths.average;
  p.density = g.num_vertices() >= 2 ? density(g) : 0.0;
  p.reciprocity = reciprocity(g);
  p.assortativity = assortativity(g);
  p.centralization = freeman_centralization(g);
  p.transitivity = transitivity(g);
  p.degree = degree_centrality(g, Direction::total);
  p.betweenness = betweenness_centrality(g, BetweennessMode::path_count, workers);
  p.closeness = closeness_centrality(g, ClosenessMode::reciprocal, workers);
  p.farness = closeness_centrality(g, ClosenessMode::farness, workers);
  p.pagerank = pagerank_centrality(g);
  return p;
}

}  // namespace prank
