#pragma once

// Independent reference implementations used by the tests. They favour
// obviousness over speed and share no code with the library.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "prank/graph.hpp"

namespace oracle {

struct PathBetweenness {
  std::vector<double> counts;     // shortest s-t paths through v, summed over pairs
  std::vector<double> fractions;  // share of shortest s-t paths through v, summed over pairs
};

// Enumerates every simple path between every ordered pair, keeps the shortest
// ones and tallies interior vertices.
inline PathBetweenness exhaustive_betweenness(const prank::Graph& g) {
  const std::size_t n = g.num_vertices();
  PathBetweenness out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  std::vector<std::vector<prank::VertexId>> paths;
  std::vector<prank::VertexId> stack;
  std::vector<char> on_path(n, 0);
  for (prank::VertexId s = 0; s < n; ++s) {
    for (prank::VertexId t = 0; t < n; ++t) {
      if (s == t) continue;
      paths.clear();
      stack.assign(1, s);
      std::fill(on_path.begin(), on_path.end(), 0);
      on_path[s] = 1;
      auto dfs = [&](auto&& self, prank::VertexId v) -> void {
        if (v == t) {
          paths.push_back(stack);
          return;
        }
        for (prank::VertexId w : g.out_neighbors(v)) {
          if (on_path[w]) continue;
          on_path[w] = 1;
          stack.push_back(w);
          self(self, w);
          stack.pop_back();
          on_path[w] = 0;
        }
      };
      dfs(dfs, s);
      if (paths.empty()) continue;
      std::size_t shortest = paths[0].size();
      for (const auto& p : paths) shortest = std::min(shortest, p.size());
      double total = 0.0;
      std::vector<double> through(n, 0.0);
      for (const auto& p : paths) {
        if (p.size() != shortest) continue;
        total += 1.0;
        for (std::size_t k = 1; k + 1 < p.size(); ++k) through[p[k]] += 1.0;
      }
      for (std::size_t v = 0; v < n; ++v) {
        out.counts[v] += through[v];
        out.fractions[v] += through[v] / total;
      }
    }
  }
  return out;
}

// Two-sample K-S statistic by evaluating both ECDFs at every pooled point.
inline double ks_statistic(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  double best = 0.0;
  for (double x : pooled) {
    double fa = 0.0, fb = 0.0;
    for (double v : a) fa += v <= x ? 1.0 : 0.0;
    for (double v : b) fb += v <= x ? 1.0 : 0.0;
    best = std::max(best, std::abs(fa / static_cast<double>(a.size()) - fb / static_cast<double>(b.size())));
  }
  return best;
}

// Least squares with an explicit intercept column through the SVD
// pseudo-inverse: beta = V S^+ U^T y on [X, 1].
inline Eigen::VectorXd pinv_least_squares(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  Eigen::MatrixXd design(x.rows(), x.cols() + 1);
  design << x, Eigen::VectorXd::Ones(x.rows());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cutoff = 1e-12 * s(0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) inv(i) = s(i) > cutoff ? 1.0 / s(i) : 0.0;
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose() * y;
}

// max |D^T (y - D beta)| with D = [X, 1], scaled by max(1, |D^T y|_inf).
inline double normal_equation_residual(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                       const std::vector<double>& beta) {
  Eigen::MatrixXd design(x.rows(), x.cols() + 1);
  design << x, Eigen::VectorXd::Ones(x.rows());
  const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(beta.data(), static_cast<Eigen::Index>(beta.size()));
  const Eigen::VectorXd r = design.transpose() * (y - design * b);
  const double scale = std::max(1.0, (design.transpose() * y).cwiseAbs().maxCoeff());
  return r.cwiseAbs().maxCoeff() / scale;
}

}  // namespace oracle
