#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prank/graph.hpp"

namespace prank {

enum class Direction { in, out, total };
enum class BetweennessMode { path_count, fractional };
enum class ClosenessMode { reciprocal, farness };

/// Hop distances and shortest-path counts for every ordered pair. Quadratic
/// memory; meant for small graphs and tests.
struct ShortestPathSummary {
  static constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

  std::size_t n = 0;
  std::vector<std::uint32_t> dist;
  std::vector<double> sigma;

  std::uint32_t distance(VertexId i, VertexId j) const { return dist[i * n + j]; }
  double paths(VertexId i, VertexId j) const { return sigma[i * n + j]; }
};

ShortestPathSummary shortest_paths(const Graph& g);

std::vector<double> degree_centrality(const Graph& g, Direction direction = Direction::total);

/// path_count sums raw shortest-path counts through each vertex;
/// fractional is the usual pair-dependency sum. Both use Brandes'
/// accumulation over BFS DAGs.
std::vector<double> betweenness_centrality(const Graph& g, BetweennessMode mode = BetweennessMode::path_count,
                                           unsigned workers = 1);

/// reciprocal: (reachable - 1) / sum of distances, 0 when nothing is
/// reachable. farness: sum of distances to reachable vertices / n.
std::vector<double> closeness_centrality(const Graph& g, ClosenessMode mode = ClosenessMode::reciprocal,
                                         unsigned workers = 1);

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Power iteration until the L1 change drops below `tol`. Dangling vertices
/// spread their mass uniformly.
std::vector<double> pagerank_centrality(const Graph& g, double damping = 0.85, double tol = 1e-12,
                                        std::size_t max_iter = 10000);

struct PathLengthStats {
  std::size_t diameter = 0;
  double average = 0.0;
  std::size_t connected_pairs = 0;
};

/// Over ordered pairs i != j with a finite distance only.
PathLengthStats path_length_stats(const Graph& g, unsigned workers = 1);
std::size_t diameter(const Graph& g);
double avg_path_length(const Graph& g);

/// |arcs| / (n (n - 1)); requires n >= 2.
double density(const Graph& g);
/// Fraction of arcs whose reverse arc is present (0 for an arcless graph).
double reciprocity(const Graph& g);
/// Pearson correlation of total degree at the two ends of every arc;
/// nullopt when either side has zero variance.
std::optional<double> assortativity(const Graph& g);
/// Freeman degree centralization on total degree, scaled so that a
/// bidirectional star scores 1.
double freeman_centralization(const Graph& g);
/// 3 * triangles / connected triples, on the symmetrized graph.
double transitivity(const Graph& g);

struct NetworkProfile {
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  std::size_t diameter = 0;
  double density = 0.0;
  double avg_path_length = 0.0;
  double reciprocity = 0.0;
  std::optional<double> assortativity;
  double centralization = 0.0;
  double transitivity = 0.0;

  std::vector<double> degree;       // total degree
  std::vector<double> betweenness;  // path_count
  std::vector<double> closeness;    // reciprocal
  std::vector<double> farness;      // farness
  std::vector<double> pagerank;     // damping 0.85
};

NetworkProfile network_profile(const Graph& g, unsigned workers = 1);

}  // namespace prank
