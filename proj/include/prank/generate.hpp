#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prank/attributes.hpp"
#include "prank/distance.hpp"
#include "prank/graph.hpp"
#include "prank/ranking.hpp"

namespace prank {

/// Per-vertex out-degree budget: a constant k, or i.i.d. draws from a source
/// network's out-degree sequence.
struct DegreeSpec {
  enum class Mode { constant, resample };
  Mode mode = Mode::constant;
  std::size_t k = 1;
  std::vector<std::size_t> source_degrees;

  static DegreeSpec constant(std::size_t k) { return {Mode::constant, k, {}}; }
  static DegreeSpec resample(std::vector<std::size_t> source_degrees) {
    return {Mode::resample, 0, std::move(source_degrees)};
  }
};

struct PriorityRankOptions {
  unsigned workers = 1;
  /// Centralities for centrality-kind distances, typically from the network
  /// being re-created. When absent they are bootstrapped (see generate.cpp).
  const Centralities* reference = nullptr;
  bool keep_rankings = false;
};

struct PriorityRankResult {
  Graph graph;
  std::vector<std::size_t> out_degrees;
  std::vector<std::string> warnings;
  std::vector<LocalRanking> rankings;  // filled when keep_rankings is set
};

/// Every vertex ranks all others by `spec` and draws its out-degree budget of
/// distinct targets with probability proportional to 1/rank.
PriorityRankResult priority_rank_generate(std::size_t n, const AttributeTable* attrs, const DistanceSpec& spec,
                                          const DegreeSpec& degrees, std::uint64_t seed,
                                          const PriorityRankOptions& options = {});

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Unsymmetrized ring lattice i -> i+1..i+k_neighbors (mod n) with each arc's
/// head rewired with probability p_rewire.
Graph gen_watts_strogatz(std::size_t n, std::size_t k_neighbors, double p_rewire, std::uint64_t seed);

/// Symmetrized. n0 = 0 selects the smallest valid seed clique, n0 = k.
Graph gen_barabasi_albert(std::size_t n, std::size_t k, std::size_t n0, std::uint64_t seed);

Graph gen_forest_fire(std::size_t n, double p_burn, std::size_t ambassadors, std::uint64_t seed);

/// Symmetrized; throws std::invalid_argument when the vertex count after
/// `steps` would exceed `vertex_budget`.
Graph gen_dorogovtsev_goltsev_mendes(std::size_t steps, std::size_t vertex_budget = 10'000'000);

struct DisassortativeResult {
  Graph graph;
  std::size_t rounds = 0;
  double assortativity = 0.0;
  bool reached = false;
  std::vector<std::string> warnings;
};

/// Hub-and-spoke construction redrawn until the symmetrized graph's degree
/// assortativity falls below `stop_threshold`. The structure is laid out for
/// 100 vertices and scales proportionally for other n.
DisassortativeResult gen_disassortative(std::size_t n = 100, double stop_threshold = -0.4,
                                        std::size_t max_rounds = 200, std::uint64_t seed = 0);

}  // namespace prank
