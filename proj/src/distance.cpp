#include "prank/distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "prank/metrics.hpp"
#include "prank/stats.hpp"

namespace prank {

namespace {

struct KindName {
  DistanceKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {DistanceKind::random, "random"},
    {DistanceKind::degree, "degree"},
    {DistanceKind::betweenness, "betweenness"},
    {DistanceKind::closeness, "closeness"},
    {DistanceKind::pagerank, "pagerank"},
    {DistanceKind::euclidean1d, "euclidean1d"},
    {DistanceKind::euclidean2d, "euclidean2d"},
    {DistanceKind::cosine, "cosine"},
    {DistanceKind::aggregate, "aggregate"},
    {DistanceKind::hierarchical_mix, "hierarchical_mix"},
    {DistanceKind::linear_regression, "linear_regression"},
    {DistanceKind::naive_bayes, "naive_bayes"},
};

template <typename T>
const T& params_as(const DistanceSpec& spec) {
  const T* p = std::get_if<T>(&spec.params);
  if (p == nullptr) {
    throw std::invalid_argument("distance spec `" + std::string(to_string(spec.kind)) +
                                "` carries parameters of the wrong kind");
  }
  return *p;
}

const AttributeTable& need_attributes(const DistanceContext& ctx, DistanceKind kind) {
  if (ctx.attributes == nullptr) {
    throw std::invalid_argument("distance `" + std::string(to_string(kind)) + "` needs vertex attributes");
  }
  return *ctx.attributes;
}

void check_numeric(const AttributeTable& t, std::size_t c, DistanceKind kind) {
  if (c >= t.columns()) {
    throw std::invalid_argument("distance `" + std::string(to_string(kind)) + "`: missing attribute column " +
                                std::to_string(c));
  }
  if (!t.column(c).numeric()) {
    throw std::invalid_argument("distance `" + std::string(to_string(kind)) + "`: attribute `" + t.column(c).name +
                                "` is categorical");
  }
}

double euclidean(const AttributeTable& t, std::span<const std::size_t> cols, VertexId i, VertexId j) {
  double s = 0.0;
  for (std::size_t c : cols) {
    const double d = t.value(c, i) - t.value(c, j);
    s += d * d;
  }
  return std::sqrt(s);
}

double cosine_distance(const AttributeTable& t, std::span<const std::size_t> cols, VertexId i, VertexId j) {
  double dot = 0.0, ni = 0.0, nj = 0.0;
  for (std::size_t c : cols) {
    const double a = t.value(c, i), b = t.value(c, j);
    dot += a * b;
    ni += a * a;
    nj += b * b;
  }
  if (ni == 0.0 || nj == 0.0) {
    throw std::invalid_argument("cosine distance: zero-norm attribute vector at vertex " +
                                std::to_string(ni == 0.0 ? i : j));
  }
  return std::max(0.0, 1.0 - dot / (std::sqrt(ni) * std::sqrt(nj)));
}

const std::vector<double>& centrality_vector(const DistanceSpec& spec, const Centralities& c) {
  switch (spec.kind) {
    case DistanceKind::degree: return c.degree;
    case DistanceKind::betweenness: return c.betweenness;
    case DistanceKind::closeness:
      return params_as<CentralityParams>(spec).use_farness ? c.farness : c.closeness;
    case DistanceKind::pagerank: return c.pagerank;
    default: throw std::logic_error("not a centrality kind");
  }
}

}  // namespace

std::string_view to_string(DistanceKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

DistanceKind distance_kind_from_string(std::string_view s) {
  for (const auto& k : kKindNames) {
    if (k.name == s) return k.kind;
  }
  throw std::invalid_argument("unknown distance kind `" + std::string(s) + "`");
}

bool is_centrality_kind(DistanceKind kind) {
  return kind == DistanceKind::degree || kind == DistanceKind::betweenness || kind == DistanceKind::closeness ||
         kind == DistanceKind::pagerank;
}

bool is_learned_kind(DistanceKind kind) {
  return kind == DistanceKind::linear_regression || kind == DistanceKind::naive_bayes;
}

FeatureEncoder FeatureEncoder::for_table(const AttributeTable& table) {
  FeatureEncoder enc;
  for (std::size_t c = 0; c < table.columns(); ++c) {
    const auto& col = table.column(c);
    enc.columns.push_back({c, !col.numeric(), col.numeric() ? 1 : col.labels.size()});
  }
  return enc;
}

std::size_t FeatureEncoder::width() const {
  std::size_t w = 0;
  for (const auto& c : columns) w += c.one_hot ? c.levels : 1;
  return w;
}

void FeatureEncoder::encode(const AttributeTable& table, VertexId v, std::span<double> out) const {
  std::size_t k = 0;
  for (const auto& c : columns) {
    const double x = table.value(c.attribute, v);
    if (c.one_hot) {
      for (std::size_t l = 0; l < c.levels; ++l) out[k + l] = static_cast<double>(l) == x ? 1.0 : 0.0;
      k += c.levels;
    } else {
      out[k++] = x;
    }
  }
}

double LinearModel::predict(std::span<const double> w) const {
  if (w.size() + 1 != beta.size()) throw std::invalid_argument("linear model: feature width mismatch");
  double s = beta.back();
  for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * beta[k];
  return s;
}

double NaiveBayesModel::posterior_no_arc(std::span<const double> w) const {
  if (w.size() != types.size()) throw std::invalid_argument("naive bayes: feature width mismatch");
  std::array<double, 2> ll = log_prior;
  for (int c = 0; c < 2; ++c) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (types[k] == FeatureType::gaussian) {
        const double var = variance[c][k];
        const double d = w[k] - mean[c][k];
        ll[c] += -0.5 * std::log(2.0 * M_PI * var) - d * d / (2.0 * var);
      } else {
        const double p = p_one[c][k];
        ll[c] += w[k] > 0.5 ? std::log(p) : std::log1p(-p);
      }
    }
  }
  // P(C=1|W) = 1 / (1 + exp(ll0 - ll1)), evaluated without overflow.
  const double z = ll[0] - ll[1];
  return z > 0 ? std::exp(-z) / (1.0 + std::exp(-z)) : 1.0 / (1.0 + std::exp(z));
}

double NaiveBayesModel::distance(std::span<const double> w) const {
  const double p1 = posterior_no_arc(w);
  return p1 / ((1.0 - p1) + epsilon);
}

DistanceSpec DistanceSpec::random(double mu, double sigma) {
  if (!(sigma > 0)) throw std::invalid_argument("random distance: sigma must be > 0");
  return {DistanceKind::random, RandomParams{mu, sigma}};
}

DistanceSpec DistanceSpec::centrality(DistanceKind kind, double epsilon, bool use_farness) {
  if (!is_centrality_kind(kind)) throw std::invalid_argument("not a centrality distance kind");
  if (!(epsilon > 0)) throw std::invalid_argument("centrality distance: epsilon must be > 0");
  return {kind, CentralityParams{epsilon, use_farness}};
}

DistanceSpec DistanceSpec::euclidean1d(std::size_t attribute) {
  return {DistanceKind::euclidean1d, AttributeParams{{attribute}}};
}

DistanceSpec DistanceSpec::euclidean2d(std::size_t first, std::size_t second) {
  return {DistanceKind::euclidean2d, AttributeParams{{first, second}}};
}

DistanceSpec DistanceSpec::cosine(std::vector<std::size_t> attributes) {
  if (attributes.empty()) throw std::invalid_argument("cosine distance: no attributes");
  return {DistanceKind::cosine, AttributeParams{std::move(attributes)}};
}

DistanceSpec DistanceSpec::aggregate(std::vector<std::size_t> attributes, std::vector<double> weights) {
  if (attributes.size() != weights.size()) {
    throw std::invalid_argument("aggregate distance: one weight per attribute required");
  }
  for (double w : weights) {
    if (!(w >= 0) || !std::isfinite(w)) throw std::invalid_argument("aggregate distance: weights must be >= 0");
  }
  return {DistanceKind::aggregate, AggregateParams{std::move(attributes), std::move(weights)}};
}

DistanceSpec make_worked_example_distance(const AttributeTable& table) {
  const auto age = table.find("age");
  const auto sex = table.find("sex");
  if (!age || !sex) throw std::invalid_argument("worked example distance needs `age` and `sex` columns");
  if (!table.column(*age).numeric()) throw std::invalid_argument("`age` must be numeric");
  if (table.column(*sex).numeric()) throw std::invalid_argument("`sex` must be categorical");
  return DistanceSpec::aggregate({*age, *sex}, {1.0, 10.0});
}

DistanceSpec make_hierarchical_mix_distance(double alpha, std::vector<int> class_rank,
                                            std::vector<std::size_t> euclid_attributes) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("hierarchical mix: alpha must be in [0, 1]");
  return {DistanceKind::hierarchical_mix,
          HierarchicalParams{alpha, std::move(class_rank), std::move(euclid_attributes)}};
}

Centralities compute_centralities(const Graph& g, unsigned workers) {
  Centralities c;
  c.degree = degree_centrality(g, Direction::total);
  c.betweenness = betweenness_centrality(g, BetweennessMode::path_count, workers);
  c.closeness = closeness_centrality(g, ClosenessMode::reciprocal, workers);
  c.farness = closeness_centrality(g, ClosenessMode::farness, workers);
  c.pagerank = pagerank_centrality(g);
  return c;
}

void validate(const DistanceSpec& spec, const DistanceContext& ctx) {
  const auto kind = spec.kind;
  auto check_rows = [&](const AttributeTable& t) {
    if (t.rows() != ctx.n) {
      throw std::invalid_argument("attribute table has " + std::to_string(t.rows()) + " rows for " +
                                  std::to_string(ctx.n) + " vertices");
    }
  };
  switch (kind) {
    case DistanceKind::random: {
      const auto& p = params_as<RandomParams>(spec);
      if (!(p.sigma > 0)) throw std::invalid_argument("random distance: sigma must be > 0");
      return;
    }
    case DistanceKind::degree:
    case DistanceKind::betweenness:
    case DistanceKind::closeness:
    case DistanceKind::pagerank: {
      params_as<CentralityParams>(spec);
      if (ctx.centralities == nullptr) {
        throw std::invalid_argument("distance `" + std::string(to_string(kind)) + "` needs centralities");
      }
      if (centrality_vector(spec, *ctx.centralities).size() != ctx.n) {
        throw std::invalid_argument("centrality vector length does not match vertex count");
      }
      return;
    }
    case DistanceKind::euclidean1d:
    case DistanceKind::euclidean2d:
    case DistanceKind::cosine: {
      const auto& p = params_as<AttributeParams>(spec);
      const auto& t = need_attributes(ctx, kind);
      check_rows(t);
      const std::size_t want = kind == DistanceKind::euclidean1d ? 1 : kind == DistanceKind::euclidean2d ? 2 : 0;
      if (want != 0 && p.attributes.size() != want) {
        throw std::invalid_argument("distance `" + std::string(to_string(kind)) + "` takes " +
                                    std::to_string(want) + " attribute(s)");
      }
      if (p.attributes.empty()) throw std::invalid_argument("cosine distance: no attributes");
      for (std::size_t c : p.attributes) check_numeric(t, c, kind);
      if (kind == DistanceKind::cosine) {
        for (VertexId v = 0; v < ctx.n; ++v) {
          double norm = 0.0;
          for (std::size_t c : p.attributes) norm += t.value(c, v) * t.value(c, v);
          if (norm == 0.0) {
            throw std::invalid_argument("cosine distance: zero-norm attribute vector at vertex " + std::to_string(v));
          }
        }
      }
      return;
    }
    case DistanceKind::aggregate: {
      const auto& p = params_as<AggregateParams>(spec);
      const auto& t = need_attributes(ctx, kind);
      check_rows(t);
      if (p.attributes.size() != p.weights.size()) {
        throw std::invalid_argument("aggregate distance: one weight per attribute required");
      }
      for (std::size_t c : p.attributes) {
        if (c >= t.columns()) throw std::invalid_argument("aggregate distance: missing attribute column");
      }
      return;
    }
    case DistanceKind::hierarchical_mix: {
      const auto& p = params_as<HierarchicalParams>(spec);
      if (p.class_rank.size() < ctx.n) {
        throw std::invalid_argument("hierarchical mix: vertex " + std::to_string(p.class_rank.size()) +
                                    " has no class");
      }
      if (p.alpha > 0.0) {
        const auto& t = need_attributes(ctx, kind);
        check_rows(t);
        for (std::size_t c : p.attributes) check_numeric(t, c, kind);
      }
      return;
    }
    case DistanceKind::linear_regression: {
      const auto& p = params_as<LinearRegressionParams>(spec);
      const auto& t = need_attributes(ctx, kind);
      check_rows(t);
      if (p.model.beta.size() != 2 * p.encoder.width() + 1) {
        throw std::invalid_argument("linear regression distance: coefficient count does not match features");
      }
      for (const auto& c : p.encoder.columns) {
        if (c.attribute >= t.columns()) throw std::invalid_argument("linear regression distance: missing attribute");
      }
      return;
    }
    case DistanceKind::naive_bayes: {
      const auto& p = params_as<NaiveBayesParams>(spec);
      const auto& t = need_attributes(ctx, kind);
      check_rows(t);
      if (p.model.types.size() != 2 * p.encoder.width()) {
        throw std::invalid_argument("naive bayes distance: model width does not match features");
      }
      for (const auto& c : p.encoder.columns) {
        if (c.attribute >= t.columns()) throw std::invalid_argument("naive bayes distance: missing attribute");
      }
      return;
    }
  }
}

double evaluate(const DistanceSpec& spec, const DistanceContext& ctx, VertexId i, VertexId j) {
  if (i == j) return 0.0;
  switch (spec.kind) {
    case DistanceKind::random: {
      const auto& p = params_as<RandomParams>(spec);
      RngStream rng = RngStream(ctx.seed, i).derive(j);
      return std::abs(draw(Normal{p.mu, p.sigma}, rng));
    }
    case DistanceKind::degree:
    case DistanceKind::betweenness:
    case DistanceKind::closeness:
    case DistanceKind::pagerank: {
      if (ctx.centralities == nullptr) throw std::invalid_argument("centrality distance without centralities");
      const auto& p = params_as<CentralityParams>(spec);
      return 1.0 / (centrality_vector(spec, *ctx.centralities).at(j) + p.epsilon);
    }
    case DistanceKind::euclidean1d:
    case DistanceKind::euclidean2d: {
      const auto& p = params_as<AttributeParams>(spec);
      const auto& t = need_attributes(ctx, spec.kind);
      for (std::size_t c : p.attributes) check_numeric(t, c, spec.kind);
      return euclidean(t, p.attributes, i, j);
    }
    case DistanceKind::cosine: {
      const auto& p = params_as<AttributeParams>(spec);
      const auto& t = need_attributes(ctx, spec.kind);
      for (std::size_t c : p.attributes) check_numeric(t, c, spec.kind);
      return cosine_distance(t, p.attributes, i, j);
    }
    case DistanceKind::aggregate: {
      const auto& p = params_as<AggregateParams>(spec);
      const auto& t = need_attributes(ctx, spec.kind);
      double s = 0.0;
      for (std::size_t k = 0; k < p.attributes.size(); ++k) {
        const std::size_t c = p.attributes[k];
        const double a = t.value(c, i), b = t.value(c, j);
        // Categorical columns compare by label: 0 if equal, 1 otherwise.
        const double d = t.column(c).numeric() ? std::abs(a - b) : (a == b ? 0.0 : 1.0);
        s += p.weights[k] * d;
      }
      return s;
    }
    case DistanceKind::hierarchical_mix: {
      const auto& p = params_as<HierarchicalParams>(spec);
      if (i >= p.class_rank.size() || j >= p.class_rank.size()) {
        throw std::invalid_argument("hierarchical mix: vertex " + std::to_string(std::max(i, j)) + " has no class");
      }
      const double dh = std::abs(static_cast<double>(p.class_rank[i]) - static_cast<double>(p.class_rank[j]));
      const double de = p.alpha > 0.0 ? euclidean(need_attributes(ctx, spec.kind), p.attributes, i, j) : 0.0;
      return p.alpha * de + (1.0 - p.alpha) * dh;
    }
    case DistanceKind::linear_regression: {
      const auto& p = params_as<LinearRegressionParams>(spec);
      const auto& t = need_attributes(ctx, spec.kind);
      const std::size_t w = p.encoder.width();
      std::vector<double> feat(2 * w);
      p.encoder.encode(t, i, std::span(feat).first(w));
      p.encoder.encode(t, j, std::span(feat).subspan(w));
      return std::max(0.0, p.model.predict(feat));
    }
    case DistanceKind::naive_bayes: {
      const auto& p = params_as<NaiveBayesParams>(spec);
      const auto& t = need_attributes(ctx, spec.kind);
      const std::size_t w = p.encoder.width();
      std::vector<double> feat(2 * w);
      p.encoder.encode(t, i, std::span(feat).first(w));
      p.encoder.encode(t, j, std::span(feat).subspan(w));
      return p.model.distance(feat);
    }
  }
  throw std::logic_error("unhandled distance kind");
}

void distances_from(const DistanceSpec& spec, const DistanceContext& ctx, VertexId i, std::span<double> out) {
  if (out.size() != ctx.n) throw std::invalid_argument("distances_from: output size must equal n");
  if (is_learned_kind(spec.kind)) {
    // Encode the source once; only the target half changes along the row.
    const auto& t = need_attributes(ctx, spec.kind);
    const FeatureEncoder& enc = spec.kind == DistanceKind::linear_regression
                                    ? params_as<LinearRegressionParams>(spec).encoder
                                    : params_as<NaiveBayesParams>(spec).encoder;
    const std::size_t w = enc.width();
    std::vector<double> feat(2 * w);
    enc.encode(t, i, std::span(feat).first(w));
    for (VertexId j = 0; j < ctx.n; ++j) {
      if (j == i) {
        out[j] = 0.0;
        continue;
      }
      enc.encode(t, j, std::span(feat).subspan(w));
      out[j] = spec.kind == DistanceKind::linear_regression
                   ? std::max(0.0, params_as<LinearRegressionParams>(spec).model.predict(feat))
                   : params_as<NaiveBayesParams>(spec).model.distance(feat);
    }
    return;
  }
  for (VertexId j = 0; j < ctx.n; ++j) out[j] = evaluate(spec, ctx, i, j);
}

}  // namespace prank
