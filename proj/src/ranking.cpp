#include "prank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prank {

namespace {

// Fenwick tree over entry weights; supports draw-and-remove in O(log n).
class WeightTree {
 public:
  explicit WeightTree(std::span<const double> w) : tree_(w.size() + 1, 0.0), weight_(w.begin(), w.end()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] += w[i];
    }
    // Half-open power of two used by the descent.
    top_ = 1;
    while (top_ * 2 < tree_.size()) top_ *= 2;
  }

  // Live mass as seen by find(); consistent with the tree's own rounding.
  double total() const {
    double s = 0.0;
    for (std::size_t j = tree_.size() - 1; j > 0; j -= j & (~j + 1)) s += tree_[j];
    return s;
  }

  // Smallest index whose prefix sum exceeds `target`.
  std::size_t find(double target) const {
    std::size_t pos = 0;
    for (std::size_t step = top_; step > 0; step /= 2) {
      const std::size_t next = pos + step;
      if (next < tree_.size() && tree_[next] <= target) {
        pos = next;
        target -= tree_[next];
      }
    }
    return pos;  // zero-based index of the selected entry
  }

  void remove(std::size_t i) {
    const double w = weight_[i];
    weight_[i] = 0.0;
    for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] -= w;
  }

  double weight(std::size_t i) const { return weight_[i]; }
  std::size_t size() const { return weight_.size(); }

 private:
  std::vector<double> tree_;
  std::vector<double> weight_;
  std::size_t top_ = 1;
};

}  // namespace

std::vector<double> selection_probabilities(std::span<const std::size_t> ranks) {
  std::vector<double> p(ranks.size());
  double total = 0.0;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (ranks[k] == 0) throw std::invalid_argument("selection_probabilities: ranks are 1-based");
    p[k] = 1.0 / static_cast<double>(ranks[k]);
  }
  // Smallest weights first keeps the normalizer accurate for long rankings.
  for (std::size_t k = ranks.size(); k-- > 0;) total += p[k];
  for (double& x : p) x /= total;
  return p;
}

LocalRanking build_local_ranking(VertexId source, std::span<const double> distances) {
  const std::size_t n = distances.size();
  if (source >= n) throw std::invalid_argument("build_local_ranking: source out of range");
  LocalRanking r;
  r.source = source;
  r.entries.reserve(n - 1);
  for (VertexId v = 0; v < n; ++v) {
    if (v == source) continue;
    if (!std::isfinite(distances[v]) || distances[v] < 0) {
      throw std::invalid_argument("build_local_ranking: distance to vertex " + std::to_string(v) +
                                  " is not a finite non-negative value");
    }
    r.entries.push_back({v, distances[v], 0});
  }
  std::sort(r.entries.begin(), r.entries.end(), [](const RankingEntry& a, const RankingEntry& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.vertex < b.vertex;
  });
  std::vector<std::size_t> ranks(r.entries.size());
  for (std::size_t k = 0; k < r.entries.size(); ++k) {
    const bool tied = k > 0 && r.entries[k].distance == r.entries[k - 1].distance;
    r.entries[k].rank = tied ? r.entries[k - 1].rank : k + 1;
    ranks[k] = r.entries[k].rank;
  }
  r.probabilities = selection_probabilities(ranks);
  return r;
}

LocalRanking build_local_ranking(VertexId source, std::size_t n,
                                 std::span<const std::pair<VertexId, double>> distances) {
  if (source >= n) throw std::invalid_argument("build_local_ranking: source out of range");
  std::vector<double> dense(n, 0.0);
  std::vector<char> seen(n, 0);
  for (const auto& [v, d] : distances) {
    if (v >= n) throw std::invalid_argument("build_local_ranking: vertex " + std::to_string(v) + " out of range");
    if (v == source) throw std::invalid_argument("build_local_ranking: distance to the source itself given");
    if (seen[v]) throw std::invalid_argument("build_local_ranking: vertex " + std::to_string(v) + " given twice");
    seen[v] = 1;
    dense[v] = d;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v != source && !seen[v]) {
      throw std::invalid_argument("build_local_ranking: missing distance for vertex " + std::to_string(v));
    }
  }
  return build_local_ranking(source, dense);
}

std::vector<VertexId> sample_targets(const LocalRanking& ranking, std::size_t k, RngStream& rng) {
  const std::size_t m = ranking.entries.size();
  if (k > m) {
    throw std::invalid_argument("sample_targets: k=" + std::to_string(k) + " exceeds " + std::to_string(m) +
                                " available entries");
  }
  std::vector<VertexId> out;
  out.reserve(k);
  if (k == 0) return out;
  // Weights 1/rank are proportional to the probabilities and exact.
  std::vector<double> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = 1.0 / static_cast<double>(ranking.entries[i].rank);
  WeightTree tree(w);
  double remaining = tree.total();
  for (std::size_t draw = 0; draw < k; ++draw) {
    std::size_t idx = tree.find(rng.uniform() * remaining);
    if (idx >= m || tree.weight(idx) == 0.0) {
      // Rounding pushed the target past the live mass; take the last live entry.
      idx = m;
      while (idx-- > 0 && tree.weight(idx) == 0.0) {
      }
    }
    out.push_back(ranking.entries[idx].vertex);
    tree.remove(idx);
    remaining = tree.total();
  }
  return out;
}

std::string format_rankings_tsv(std::span<const LocalRanking> rankings) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& r : rankings) {
    for (std::size_t k = 0; k < r.entries.size(); ++k) {
      const auto& e = r.entries[k];
      out << r.source << '\t' << e.vertex << '\t' << e.distance << '\t' << e.rank << '\t' << r.probabilities[k]
          << '\n';
    }
  }
  return out.str();
}

}  // namespace prank
