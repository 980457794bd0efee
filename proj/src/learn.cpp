#include "prank/learn.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace prank {

namespace {

std::uint64_t pair_key(VertexId i, VertexId j) { return (static_cast<std::uint64_t>(i) << 32) | j; }

std::vector<Arc> sample_non_arcs(const Graph& g, std::size_t wanted, std::size_t available, RngStream& rng) {
  const std::size_t n = g.num_vertices();
  std::vector<Arc> out;
  if (wanted * 2 >= available) {
    // Dense regime: enumerate, then a partial Fisher-Yates shuffle.
    std::vector<Arc> all;
    all.reserve(available);
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = 0; j < n; ++j) {
        if (i != j && !g.has_arc(i, j)) all.push_back({i, j});
      }
    }
    for (std::size_t k = 0; k < wanted; ++k) {
      std::swap(all[k], all[rng.uniform_int(k, all.size() - 1)]);
    }
    all.resize(wanted);
    out = std::move(all);
  } else {
    // Sparse regime: rejection sampling; at most half the draws are rejected on average.
    std::unordered_set<std::uint64_t> taken;
    out.reserve(wanted);
    while (out.size() < wanted) {
      const auto i = static_cast<VertexId>(rng.uniform_int(0, n - 1));
      const auto j = static_cast<VertexId>(rng.uniform_int(0, n - 1));
      if (i == j || g.has_arc(i, j) || !taken.insert(pair_key(i, j)).second) continue;
      out.push_back({i, j});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_both_labels(const TrainingSet& ts) {
  if (ts.rows() < 2) throw std::invalid_argument("training set needs at least 2 rows");
  const auto pos = std::count(ts.labels.begin(), ts.labels.end(), 1);
  if (pos == 0 || pos == static_cast<std::ptrdiff_t>(ts.rows())) {
    throw std::invalid_argument("training set needs at least one row of each label");
  }
}

}  // namespace

TrainingSet build_training_set(const Graph& g, const AttributeTable& attrs, double negative_ratio, RngStream& rng,
                               bool all_negatives) {
  const std::size_t n = g.num_vertices();
  if (attrs.rows() != n) {
    throw std::invalid_argument("attribute table has " + std::to_string(attrs.rows()) + " rows for " +
                                std::to_string(n) + " vertices");
  }
  if (!(negative_ratio > 0) || !std::isfinite(negative_ratio)) {
    throw std::invalid_argument("negative ratio must be a positive number");
  }
  if (g.num_arcs() == 0) throw std::invalid_argument("graph has no arcs: no positive training pairs");
  const std::size_t available = n * (n - 1) - g.num_arcs();
  if (available == 0) throw std::invalid_argument("graph is complete: no negative training pairs");

  TrainingSet ts;
  ts.encoder = FeatureEncoder::for_table(attrs);
  const std::size_t w = ts.encoder.width();
  ts.cols = 2 * w;
  std::vector<FeatureType> half;
  for (const auto& c : ts.encoder.columns) {
    half.insert(half.end(), c.one_hot ? c.levels : 1, c.one_hot ? FeatureType::bernoulli : FeatureType::gaussian);
  }
  ts.feature_types = half;
  ts.feature_types.insert(ts.feature_types.end(), half.begin(), half.end());

  const std::size_t positives = g.num_arcs();
  const std::size_t wanted =
      all_negatives ? available
                    : std::min(available, static_cast<std::size_t>(std::ceil(negative_ratio * positives)));
  std::vector<Arc> negatives = sample_non_arcs(g, wanted, available, rng);

  ts.pairs.assign(g.arcs().begin(), g.arcs().end());
  ts.labels.assign(positives, 1);
  ts.pairs.insert(ts.pairs.end(), negatives.begin(), negatives.end());
  ts.labels.resize(ts.pairs.size(), 0);

  ts.features.resize(ts.pairs.size() * ts.cols);
  for (std::size_t r = 0; r < ts.pairs.size(); ++r) {
    std::span<double> row(ts.features.data() + r * ts.cols, ts.cols);
    ts.encoder.encode(attrs, ts.pairs[r].src, row.first(w));
    ts.encoder.encode(attrs, ts.pairs[r].dst, row.subspan(w));
  }
  return ts;
}

FitResult fit_linear_regression_distance(const TrainingSet& ts) {
  require_both_labels(ts);
  const auto rows = static_cast<Eigen::Index>(ts.rows());
  const auto cols = static_cast<Eigen::Index>(ts.cols);
  Eigen::MatrixXd x(rows, cols);
  Eigen::VectorXd y(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) x(r, c) = ts.features[r * cols + c];
    y(r) = 1.0 - ts.labels[r];
  }
  // Centering absorbs the intercept, so the minimum-norm solution leaves
  // constant features with zero weight and the intercept at mean(y).
  const Eigen::RowVectorXd x_mean = x.colwise().mean();
  const double y_mean = y.mean();
  x.rowwise() -= x_mean;
  y.array() -= y_mean;

  FitResult out;
  Eigen::VectorXd slope = Eigen::VectorXd::Zero(cols);
  if (cols > 0) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(x);
    slope = cod.solve(y);
    if (cod.rank() < cols) {
      out.warnings.push_back("linear regression: design matrix has rank " + std::to_string(cod.rank()) + " < " +
                             std::to_string(cols) + " features; using the minimum-norm solution");
    }
  }
  LinearRegressionParams p;
  p.encoder = ts.encoder;
  p.model.beta.assign(slope.data(), slope.data() + cols);
  p.model.beta.push_back(y_mean - x_mean.dot(slope));
  out.spec = {DistanceKind::linear_regression, std::move(p)};
  return out;
}

FitResult fit_naive_bayes_distance(const TrainingSet& ts, double epsilon) {
  require_both_labels(ts);
  if (!(epsilon > 0)) throw std::invalid_argument("naive bayes: epsilon must be > 0");
  const std::size_t cols = ts.cols;
  NaiveBayesModel m;
  m.types = ts.feature_types;
  m.epsilon = epsilon;

  FitResult out;
  std::size_t floored = 0;
  // Class 1 is "no arc", i.e. label 0.
  for (int c = 0; c < 2; ++c) {
    const int label = c == 1 ? 0 : 1;
    std::vector<double> sum(cols, 0.0), ones(cols, 0.0);
    std::size_t count = 0;
    for (std::size_t r = 0; r < ts.rows(); ++r) {
      if (ts.labels[r] != label) continue;
      ++count;
      for (std::size_t k = 0; k < cols; ++k) {
        const double v = ts.features[r * cols + k];
        sum[k] += v;
        if (v > 0.5) ones[k] += 1.0;
      }
    }
    m.log_prior[c] = std::log(static_cast<double>(count) / static_cast<double>(ts.rows()));
    m.mean[c].assign(cols, 0.0);
    m.variance[c].assign(cols, 1.0);
    m.p_one[c].assign(cols, 0.5);
    std::vector<double> sq(cols, 0.0);
    for (std::size_t k = 0; k < cols; ++k) m.mean[c][k] = sum[k] / static_cast<double>(count);
    for (std::size_t r = 0; r < ts.rows(); ++r) {
      if (ts.labels[r] != label) continue;
      for (std::size_t k = 0; k < cols; ++k) {
        const double d = ts.features[r * cols + k] - m.mean[c][k];
        sq[k] += d * d;
      }
    }
    for (std::size_t k = 0; k < cols; ++k) {
      if (m.types[k] == FeatureType::gaussian) {
        const double var = sq[k] / static_cast<double>(count);
        if (var < 1e-9) ++floored;
        m.variance[c][k] = std::max(var, 1e-9);
      } else {
        m.p_one[c][k] = (ones[k] + 1.0) / (static_cast<double>(count) + 2.0);
      }
    }
  }
  if (floored > 0) {
    out.warnings.push_back("naive bayes: " + std::to_string(floored) +
                           " per-class feature variance(s) floored at 1e-9");
  }
  NaiveBayesParams p;
  p.encoder = ts.encoder;
  p.model = std::move(m);
  out.spec = {DistanceKind::naive_bayes, std::move(p)};
  return out;
}

}  // namespace prank
