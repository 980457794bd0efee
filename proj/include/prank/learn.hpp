#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prank/attributes.hpp"
#include "prank/distance.hpp"
#include "prank/graph.hpp"
#include "prank/stats.hpp"

namespace prank {

/*
  Labeled vertex pairs for fitting a learned distance.

  Row r is the concatenation (features(i), features(j)) of pairs[r], stored
  row-major in `features` with `cols` columns. labels[r] is 1 when (i, j) is
  an arc of the source graph and 0 otherwise.
*/
struct TrainingSet {
  FeatureEncoder encoder;
  std::vector<FeatureType> feature_types;  // one per column
  std::size_t cols = 0;
  std::vector<double> features;
  std::vector<int> labels;
  std::vector<Arc> pairs;

  std::size_t rows() const { return labels.size(); }
  std::span<const double> row(std::size_t r) const { return {features.data() + r * cols, cols}; }
};

/// Every arc is a positive row. Negatives are non-arcs drawn uniformly without
/// replacement, ceil(negative_ratio * positives) of them, capped by how many
/// exist. `all_negatives` takes every non-arc instead.
TrainingSet build_training_set(const Graph& g, const AttributeTable& attrs, double negative_ratio, RngStream& rng,
                               bool all_negatives = false);

struct FitResult {
  DistanceSpec spec;
  std::vector<std::string> warnings;
};

/// Least squares with intercept on y = 1 - label. A rank-deficient design
/// yields the minimum-norm solution and a warning.
FitResult fit_linear_regression_distance(const TrainingSet& ts);

FitResult fit_naive_bayes_distance(const TrainingSet& ts, double epsilon = 1e-6);

}  // namespace prank
