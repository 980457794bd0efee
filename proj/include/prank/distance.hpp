#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "prank/attributes.hpp"
#include "prank/graph.hpp"

namespace prank {

enum class DistanceKind {
  random,
  degree,
  betweenness,
  closeness,
  pagerank,
  euclidean1d,
  euclidean2d,
  cosine,
  aggregate,
  hierarchical_mix,
  linear_regression,
  naive_bayes,
};

std::string_view to_string(DistanceKind kind);
DistanceKind distance_kind_from_string(std::string_view s);
bool is_centrality_kind(DistanceKind kind);
bool is_learned_kind(DistanceKind kind);

/// Maps one vertex's attribute row onto a numeric feature vector.
/// Categorical columns expand to one indicator per label.
struct FeatureEncoder {
  struct Column {
    std::size_t attribute = 0;
    bool one_hot = false;
    std::size_t levels = 0;
  };
  std::vector<Column> columns;

  static FeatureEncoder for_table(const AttributeTable& table);
  std::size_t width() const;
  void encode(const AttributeTable& table, VertexId v, std::span<double> out) const;
};

enum class FeatureType { gaussian, bernoulli };

/// Prediction W . beta on W = (features_i, features_j, 1).
struct LinearModel {
  std::vector<double> beta;
  double predict(std::span<const double> w) const;
};

/*
  Gaussian/Bernoulli naive Bayes over pair features W.

  Class 1 means "no arc" and class 0 means "arc", so the distance
  P(C=1|W) / (P(C=0|W) + eps) is small for pairs that look adjacent.
*/
struct NaiveBayesModel {
  std::vector<FeatureType> types;
  std::array<double, 2> log_prior{};
  std::array<std::vector<double>, 2> mean;      // gaussian columns
  std::array<std::vector<double>, 2> variance;  // gaussian columns
  std::array<std::vector<double>, 2> p_one;     // bernoulli columns
  double epsilon = 1e-6;

  /// P(C=1 | W), i.e. the posterior of "no arc".
  double posterior_no_arc(std::span<const double> w) const;
  double distance(std::span<const double> w) const;
};

struct RandomParams {
  double mu = 0.0;
  double sigma = 1.0;
};
struct CentralityParams {
  double epsilon = 1e-6;
  /// closeness only: rank by 1/(farness + eps) instead of 1/(closeness + eps).
  bool use_farness = false;
};
struct AttributeParams {
  std::vector<std::size_t> attributes;
};
struct AggregateParams {
  std::vector<std::size_t> attributes;
  std::vector<double> weights;
};
struct HierarchicalParams {
  double alpha = 0.5;
  std::vector<int> class_rank;  // per vertex
  std::vector<std::size_t> attributes;
};
struct LinearRegressionParams {
  FeatureEncoder encoder;
  LinearModel model;
};
struct NaiveBayesParams {
  FeatureEncoder encoder;
  NaiveBayesModel model;
};

using DistanceParams = std::variant<RandomParams, CentralityParams, AttributeParams, AggregateParams,
                                    HierarchicalParams, LinearRegressionParams, NaiveBayesParams>;

/// A configured or fitted distance D(v_i, v_j).
struct DistanceSpec {
  DistanceKind kind = DistanceKind::random;
  DistanceParams params = RandomParams{};

  static DistanceSpec random(double mu = 0.0, double sigma = 1.0);
  static DistanceSpec centrality(DistanceKind kind, double epsilon = 1e-6, bool use_farness = false);
  static DistanceSpec euclidean1d(std::size_t attribute);
  static DistanceSpec euclidean2d(std::size_t first, std::size_t second);
  static DistanceSpec cosine(std::vector<std::size_t> attributes);
  static DistanceSpec aggregate(std::vector<std::size_t> attributes, std::vector<double> weights);
};

/// |age_i - age_j| + 10 [sex_i != sex_j], built as an aggregate distance over
/// the `age` (numeric) and `sex` (categorical) columns.
DistanceSpec make_worked_example_distance(const AttributeTable& table);

/// alpha * euclidean(attributes) + (1 - alpha) * |class_rank_i - class_rank_j|.
DistanceSpec make_hierarchical_mix_distance(double alpha, std::vector<int> class_rank,
                                            std::vector<std::size_t> euclid_attributes);

/// Centrality vectors of the graph a centrality-kind distance ranks against.
struct Centralities {
  std::vector<double> degree;
  std::vector<double> betweenness;
  std::vector<double> closeness;
  std::vector<double> farness;
  std::vector<double> pagerank;
};

Centralities compute_centralities(const Graph& g, unsigned workers = 1);

struct DistanceContext {
  std::size_t n = 0;
  const AttributeTable* attributes = nullptr;
  const Centralities* centralities = nullptr;
  /// Keys the random kind: the draw for (i, j) depends only on (seed, i, j).
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument when `spec` cannot be evaluated in `ctx`
/// (missing attributes or centralities, categorical column fed to a metric
/// kind, unmapped vertex, ...).
void validate(const DistanceSpec& spec, const DistanceContext& ctx);

/// D(v_i, v_j) for i != j; finite and non-negative.
double evaluate(const DistanceSpec& spec, const DistanceContext& ctx, VertexId i, VertexId j);

/// Fills out[j] = D(v_i, v_j) for every j; out[i] is set to 0.
void distances_from(const DistanceSpec& spec, const DistanceContext& ctx, VertexId i, std::span<double> out);

}  // namespace prank
