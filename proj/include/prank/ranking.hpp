#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prank/graph.hpp"
#include "prank/stats.hpp"

namespace prank {

struct RankingEntry {
  VertexId vertex;
  double distance;
  std::size_t rank;  // competition ("1224") rank, 1-based
};

/*
  A vertex's private priority queue over every other vertex.

  Entries are sorted by distance (ties broken by vertex id for presentation
  only). Equidistant vertices share a rank and the next rank skips ahead, so
  the sequence may contain gaps. probabilities[k] is the chance that entry k
  is picked on a single draw: weight 1/rank, renormalized.
*/
struct LocalRanking {
  VertexId source = 0;
  std::vector<RankingEntry> entries;
  std::vector<double> probabilities;
};

/// Dense form: distances[v] for every vertex, the source slot is ignored.
LocalRanking build_local_ranking(VertexId source, std::span<const double> distances);

/// Sparse form: the pairs must cover every vertex other than the source
/// exactly once. `n` is the total vertex count.
LocalRanking build_local_ranking(VertexId source, std::size_t n,
                                 std::span<const std::pair<VertexId, double>> distances);

/// Normalized 1/rank weights. Without ties this is 1 / (H_{n-1} i).
std::vector<double> selection_probabilities(std::span<const std::size_t> ranks);

/// Draws k distinct targets one at a time, each proportional to its weight
/// among the entries not yet drawn.
std::vector<VertexId> sample_targets(const LocalRanking& ranking, std::size_t k, RngStream& rng);

/// TSV rows `source target distance rank probability`, no header.
std::string format_rankings_tsv(std::span<const LocalRanking> rankings);

}  // namespace prank
