#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prank/attributes.hpp"
#include "prank/distance.hpp"
#include "prank/graph.hpp"
#include "prank/metrics.hpp"
#include "prank/stats.hpp"

namespace prank {

/// Four columns: `ordinal` (normal draws discretized by rank into 10 levels),
/// `category` (5 uniform labels), `lognormal` (mu 0, sigma 1) and
/// `exponential` (rate 1).
AttributeTable generate_synthetic_attributes(std::size_t n, std::uint64_t seed);

/// Parameter-free configuration of a non-learned kind for a given table:
/// euclidean kinds use the first continuous (then ordinal) columns, cosine all
/// numeric columns, aggregate every column with unit weight, and
/// hierarchical_mix classes from the first ordinal column with alpha 0.5 over
/// the continuous columns.
DistanceSpec default_distance_spec(DistanceKind kind, const AttributeTable& attrs);

inline constexpr double kSignificance = 0.05;

struct NetworkComparison {
  KsResult degree;
  KsResult betweenness;
  KsResult closeness;
  NetworkProfile first;
  NetworkProfile second;

  /// Mean of the three K-S statistics; lower is more similar.
  double combined_statistic() const { return (degree.statistic + betweenness.statistic + closeness.statistic) / 3.0; }
  bool degree_pass() const { return degree.p_value > kSignificance; }
  bool betweenness_pass() const { return betweenness.p_value > kSignificance; }
  bool closeness_pass() const { return closeness.p_value > kSignificance; }
};

/// K-S tests on total degree, betweenness and closeness, plus both profiles.
NetworkComparison compare_networks(const Graph& a, const Graph& b, unsigned workers = 1);
NetworkComparison compare_profiles(NetworkProfile a, NetworkProfile b);

struct RecreateConfig {
  std::size_t pilot_runs = 3;
  std::size_t final_runs = 20;
  std::size_t finalists = 3;
  double negative_ratio = 1.0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// Retain the winner's generated graphs (for writing them out).
  bool keep_winner_graphs = false;
};

/// One generated network scored against the source.
struct RunRecord {
  std::uint64_t seed = 0;
  KsResult degree;
  KsResult betweenness;
  KsResult closeness;
  double combined = 0.0;
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  std::size_t diameter = 0;
  double density = 0.0;
  double avg_path_length = 0.0;
  double reciprocity = 0.0;
  std::optional<double> assortativity;
  double centralization = 0.0;
  double transitivity = 0.0;
};

struct Aggregate {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for a single value
  std::size_t count = 0;
};

Aggregate aggregate(const std::vector<double>& values);

struct CandidateReport {
  std::string name;
  bool applicable = true;
  std::string reason;  // why the candidate was dropped
  std::vector<std::string> warnings;
  std::vector<RunRecord> pilot;
  double pilot_score = 0.0;
};

struct FinalistReport {
  std::string name;
  std::vector<RunRecord> runs;
  std::map<std::string, Aggregate> aggregates;
  double mean_combined = 0.0;
  std::size_t degree_passes = 0;
};

struct RecreationReport {
  NetworkProfile source;
  bool synthetic_attributes = false;
  std::uint64_t seed = 0;
  std::size_t pilot_runs = 0;
  std::size_t final_runs = 0;
  std::vector<CandidateReport> candidates;
  std::vector<FinalistReport> finalists;  // best first
  std::string winner;
  std::vector<Graph> winner_graphs;
};

/// Grid search over every applicable distance kind: a short pilot per
/// candidate, then full runs for the best few. Out-degrees are resampled from
/// `g`. Attributes are synthesized when `attrs` is null.
RecreationReport recreate(const Graph& g, const AttributeTable* attrs, const RecreateConfig& config);

}  // namespace prank
