#include "prank/serialize.hpp"

#include <stdexcept>

namespace prank {

namespace {

Json encoder_json(const FeatureEncoder& enc) {
  Json cols = Json::array();
  for (const auto& c : enc.columns) {
    cols.push_back({{"attribute", c.attribute}, {"one_hot", c.one_hot}, {"levels", c.levels}});
  }
  return cols;
}

FeatureEncoder encoder_from_json(const Json& j) {
  FeatureEncoder enc;
  for (const auto& c : j) {
    enc.columns.push_back({c.at("attribute").get<std::size_t>(), c.at("one_hot").get<bool>(),
                           c.at("levels").get<std::size_t>()});
  }
  return enc;
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json run_json(const RunRecord& r) {
  return {{"seed", r.seed},
          {"ks_degree", to_json(r.degree)},
          {"ks_betweenness", to_json(r.betweenness)},
          {"ks_closeness", to_json(r.closeness)},
          {"combined", r.combined},
          {"vertices", r.vertices},
          {"arcs", r.arcs},
          {"diameter", r.diameter},
          {"density", r.density},
          {"avg_path_length", r.avg_path_length},
          {"reciprocity", r.reciprocity},
          {"assortativity", optional_json(r.assortativity)},
          {"centralization", r.centralization},
          {"transitivity", r.transitivity}};
}

}  // namespace

Json to_json(const DistanceSpec& spec) {
  Json params = Json::object();
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RandomParams>) {
          params = {{"mu", p.mu}, {"sigma", p.sigma}};
        } else if constexpr (std::is_same_v<T, CentralityParams>) {
          params = {{"epsilon", p.epsilon}, {"use_farness", p.use_farness}};
        } else if constexpr (std::is_same_v<T, AttributeParams>) {
          params = {{"attributes", p.attributes}};
        } else if constexpr (std::is_same_v<T, AggregateParams>) {
          params = {{"attributes", p.attributes}, {"weights", p.weights}};
        } else if constexpr (std::is_same_v<T, HierarchicalParams>) {
          params = {{"alpha", p.alpha}, {"class_rank", p.class_rank}, {"attributes", p.attributes}};
        } else if constexpr (std::is_same_v<T, LinearRegressionParams>) {
          params = {{"encoder", encoder_json(p.encoder)}, {"beta", p.model.beta}};
        } else {
          std::vector<std::string> types;
          for (auto t : p.model.types) types.push_back(t == FeatureType::gaussian ? "gaussian" : "bernoulli");
          params = {{"encoder", encoder_json(p.encoder)},
                    {"types", types},
                    {"log_prior", p.model.log_prior},
                    {"mean", p.model.mean},
                    {"variance", p.model.variance},
                    {"p_one", p.model.p_one},
                    {"epsilon", p.model.epsilon}};
        }
      },
      spec.params);
  return {{"kind", std::string(to_string(spec.kind))}, {"params", params}};
}

DistanceSpec distance_spec_from_json(const Json& doc) {
  try {
    const DistanceKind kind = distance_kind_from_string(doc.at("kind").get<std::string>());
    const Json& p = doc.at("params");
    DistanceSpec spec;
    spec.kind = kind;
    switch (kind) {
      case DistanceKind::random: spec.params = RandomParams{p.at("mu"), p.at("sigma")}; break;
      case DistanceKind::degree:
      case DistanceKind::betweenness:
      case DistanceKind::closeness:
      case DistanceKind::pagerank:
        spec.params = CentralityParams{p.at("epsilon"), p.at("use_farness")};
        break;
      case DistanceKind::euclidean1d:
      case DistanceKind::euclidean2d:
      case DistanceKind::cosine:
        spec.params = AttributeParams{p.at("attributes").get<std::vector<std::size_t>>()};
        break;
      case DistanceKind::aggregate:
        spec.params = AggregateParams{p.at("attributes").get<std::vector<std::size_t>>(),
                                      p.at("weights").get<std::vector<double>>()};
        break;
      case DistanceKind::hierarchical_mix:
        spec.params = HierarchicalParams{p.at("alpha"), p.at("class_rank").get<std::vector<int>>(),
                                         p.at("attributes").get<std::vector<std::size_t>>()};
        break;
      case DistanceKind::linear_regression:
        spec.params =
            LinearRegressionParams{encoder_from_json(p.at("encoder")), {p.at("beta").get<std::vector<double>>()}};
        break;
      case DistanceKind::naive_bayes: {
        NaiveBayesParams nb;
        nb.encoder = encoder_from_json(p.at("encoder"));
        for (const auto& t : p.at("types")) {
          const auto s = t.get<std::string>();
          if (s != "gaussian" && s != "bernoulli") throw std::invalid_argument("unknown feature type `" + s + "`");
          nb.model.types.push_back(s == "gaussian" ? FeatureType::gaussian : FeatureType::bernoulli);
        }
        nb.model.log_prior = p.at("log_prior").get<std::array<double, 2>>();
        nb.model.mean = p.at("mean").get<std::array<std::vector<double>, 2>>();
        nb.model.variance = p.at("variance").get<std::array<std::vector<double>, 2>>();
        nb.model.p_one = p.at("p_one").get<std::array<std::vector<double>, 2>>();
        nb.model.epsilon = p.at("epsilon");
        for (int c = 0; c < 2; ++c) {
          const auto w = nb.model.types.size();
          if (nb.model.mean[c].size() != w || nb.model.variance[c].size() != w || nb.model.p_one[c].size() != w) {
            throw std::invalid_argument("naive bayes statistics do not match the feature count");
          }
        }
        spec.params = std::move(nb);
        break;
      }
    }
    return spec;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed distance document: ") + e.what());
  }
}

Json to_json(const KsResult& ks) {
  return {{"statistic", ks.statistic}, {"p_value", ks.p_value}, {"n", ks.n}, {"m", ks.m}};
}

Json to_json(const NetworkProfile& p, bool with_vectors) {
  Json j = {{"vertices", p.vertices},
            {"arcs", p.arcs},
            {"diameter", p.diameter},
            {"density", p.density},
            {"avg_path_length", p.avg_path_length},
            {"reciprocity", p.reciprocity},
            {"assortativity", optional_json(p.assortativity)},
            {"centralization", p.centralization},
            {"transitivity", p.transitivity}};
  if (with_vectors) {
    j["degree"] = p.degree;
    j["betweenness"] = p.betweenness;
    j["closeness"] = p.closeness;
    j["farness"] = p.farness;
    j["pagerank"] = p.pagerank;
  }
  return j;
}

Json to_json(const NetworkComparison& cmp) {
  return {{"ks_degree", to_json(cmp.degree)},
          {"ks_betweenness", to_json(cmp.betweenness)},
          {"ks_closeness", to_json(cmp.closeness)},
          {"pass_degree", cmp.degree_pass()},
          {"pass_betweenness", cmp.betweenness_pass()},
          {"pass_closeness", cmp.closeness_pass()},
          {"alpha", kSignificance},
          {"a", to_json(cmp.first, false)},
          {"b", to_json(cmp.second, false)}};
}

Json to_json(const RecreationReport& r) {
  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    Json pilot = Json::array();
    for (const auto& run : c.pilot) pilot.push_back(run_json(run));
    Json cj = {{"name", c.name}, {"applicable", c.applicable}, {"warnings", c.warnings}, {"pilot", pilot}};
    if (c.applicable) {
      cj["pilot_score"] = c.pilot_score;
    } else {
      cj["reason"] = c.reason;
    }
    candidates.push_back(std::move(cj));
  }
  Json finalists = Json::array();
  for (const auto& f : r.finalists) {
    Json runs = Json::array();
    for (const auto& run : f.runs) runs.push_back(run_json(run));
    Json agg = Json::object();
    for (const auto& [k, a] : f.aggregates) agg[k] = {{"mean", a.mean}, {"std", a.std}, {"count", a.count}};
    finalists.push_back({{"name", f.name},
                         {"mean_combined", f.mean_combined},
                         {"degree_passes", f.degree_passes},
                         {"aggregates", agg},
                         {"runs", runs}});
  }
  return {{"seed", r.seed},
          {"synthetic_attributes", r.synthetic_attributes},
          {"pilot_runs", r.pilot_runs},
          {"final_runs", r.final_runs},
          {"source", to_json(r.source)},
          {"candidates", candidates},
          {"finalists", finalists},
          {"winner", r.winner}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace prank
