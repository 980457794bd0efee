#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prank {

using VertexId = std::uint32_t;

struct Arc {
  VertexId src;
  VertexId dst;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Raised by the text loaders; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/*
  Simple directed graph over dense vertex ids 0..n-1.

  Arcs are kept sorted by (src, dst) with no duplicates and no self-loops.
  Out- and in-adjacency are stored in CSR form so the centrality kernels can
  walk neighborhoods without allocation. Instances are immutable.
*/
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary arc list. Duplicates are collapsed and
  /// counted into `duplicates` when non-null; self-loops and out-of-range
  /// endpoints throw std::invalid_argument.
  static Graph from_arcs(std::size_t n, std::vector<Arc> arcs, std::size_t* duplicates = nullptr);

  static Graph empty(std::size_t n) { return from_arcs(n, {}); }
  static Graph complete(std::size_t n);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return out_off_[v + 1] - out_off_[v]; }
  std::size_t in_degree(VertexId v) const { return in_off_[v + 1] - in_off_[v]; }

  /// Adjacency function: true iff (i, j) is an arc.
  bool has_arc(VertexId i, VertexId j) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_off_{0};
  std::vector<VertexId> out_adj_;
  std::vector<std::size_t> in_off_{0};
  std::vector<VertexId> in_adj_;
};

struct EdgeListLoad {
  Graph graph;
  std::size_t duplicates = 0;
};

/// Parses `src dst` lines (space or tab separated). `#` starts a comment and
/// an optional leading `n=<int>` line fixes the vertex count.
EdgeListLoad load_edge_list(std::string_view text);
EdgeListLoad load_edge_list_file(const std::string& path);

struct LabeledEdgeListLoad {
  Graph graph;
  std::size_t duplicates = 0;
  /// labels[v] is the external token that was mapped to dense id v.
  std::vector<std::string> labels;
};

/// Same format, but endpoints are arbitrary tokens mapped to dense ids in
/// order of first appearance.
LabeledEdgeListLoad load_labeled_edge_list(std::string_view text);

/// Sorted `src dst` lines. An `n=` header is written only when the vertex
/// count cannot be recovered from the arcs themselves.
std::string save_edge_list(const Graph& g);
void save_edge_list_file(const Graph& g, const std::string& path);

Graph symmetrize(const Graph& g);

std::vector<std::size_t> out_degree_sequence(const Graph& g);

}  // namespace prank
