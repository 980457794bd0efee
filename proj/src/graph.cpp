#include "prank/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace prank {

Graph Graph::from_arcs(std::size_t n, std::vector<Arc> arcs, std::size_t* duplicates) {
  for (const Arc& a : arcs) {
    if (a.src >= n || a.dst >= n) {
      throw std::invalid_argument("arc (" + std::to_string(a.src) + ", " + std::to_string(a.dst) +
                                  ") out of range for n=" + std::to_string(n));
    }
    if (a.src == a.dst) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(a.src));
    }
  }
  std::sort(arcs.begin(), arcs.end());
  const std::size_t before = arcs.size();
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  if (duplicates != nullptr) *duplicates = before - arcs.size();

  Graph g;
  g.n_ = n;
  g.arcs_ = std::move(arcs);

  // CSR out-adjacency falls straight out of the sorted arc order.
  g.out_off_.assign(n + 1, 0);
  g.in_off_.assign(n + 1, 0);
  for (const Arc& a : g.arcs_) {
    ++g.out_off_[a.src + 1];
    ++g.in_off_[a.dst + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_off_[v + 1] += g.out_off_[v];
    g.in_off_[v + 1] += g.in_off_[v];
  }
  g.out_adj_.resize(g.arcs_.size());
  g.in_adj_.resize(g.arcs_.size());
  std::vector<std::size_t> in_pos(g.in_off_.begin(), g.in_off_.end() - 1);
  for (std::size_t e = 0; e < g.arcs_.size(); ++e) {
    g.out_adj_[e] = g.arcs_[e].dst;
    g.in_adj_[in_pos[g.arcs_[e].dst]++] = g.arcs_[e].src;
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  std::vector<Arc> arcs;
  arcs.reserve(n * (n > 0 ? n - 1 : 0));
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = 0; j < n; ++j) {
      if (i != j) arcs.push_back({i, j});
    }
  }
  return from_arcs(n, std::move(arcs));
}

bool Graph::has_arc(VertexId i, VertexId j) const {
  if (i >= n_ || j >= n_) return false;
  auto nb = out_neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string_view strip_comment(std::string_view s) {
  const auto h = s.find('#');
  return h == std::string_view::npos ? s : s.substr(0, h);
}

// Splits on runs of spaces/tabs.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_uint(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

// Visits every significant line as (line number, content). Returns the
// declared vertex count when the first significant line is an `n=` header.
template <typename Fn>
std::optional<std::uint64_t> for_each_line(std::string_view text, Fn&& fn) {
  std::optional<std::uint64_t> declared;
  std::size_t lineno = 0;
  bool first = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.starts_with("n=")) {
      if (!first) throw ParseError(lineno, "`n=` header must precede all arcs");
      std::uint64_t n = 0;
      if (!parse_uint(trim(line.substr(2)), n)) throw ParseError(lineno, "malformed vertex count header");
      declared = n;
      first = false;
      continue;
    }
    first = false;
    fn(lineno, line);
  }
  return declared;
}

}  // namespace

EdgeListLoad load_edge_list(std::string_view text) {
  std::vector<Arc> arcs;
  std::vector<std::size_t> lines;
  std::uint64_t max_id = 0;
  bool any = false;
  auto declared = for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    const auto tok = tokens(line);
    std::uint64_t s = 0, d = 0;
    if (tok.size() != 2 || !parse_uint(tok[0], s) || !parse_uint(tok[1], d)) {
      throw ParseError(lineno, "expected `src dst` with non-negative integer ids");
    }
    if (s == d) throw ParseError(lineno, "self-loop on vertex " + std::to_string(s));
    if (std::max(s, d) > std::numeric_limits<VertexId>::max() - 1) {
      throw ParseError(lineno, "vertex id too large");
    }
    arcs.push_back({static_cast<VertexId>(s), static_cast<VertexId>(d)});
    lines.push_back(lineno);
    max_id = std::max({max_id, s, d});
    any = true;
  });
  std::uint64_t n = any ? max_id + 1 : 0;
  if (declared) {
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      if (arcs[e].src >= *declared || arcs[e].dst >= *declared) {
        throw ParseError(lines[e], "vertex id exceeds declared n=" + std::to_string(*declared));
      }
    }
    n = *declared;
  }
  EdgeListLoad out;
  out.graph = Graph::from_arcs(n, std::move(arcs), &out.duplicates);
  return out;
}

EdgeListLoad load_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_edge_list(ss.str());
}

LabeledEdgeListLoad load_labeled_edge_list(std::string_view text) {
  LabeledEdgeListLoad out;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Arc> arcs;
  auto intern = [&](std::string_view tok) {
    auto [it, inserted] = ids.try_emplace(std::string(tok), static_cast<VertexId>(out.labels.size()));
    if (inserted) out.labels.emplace_back(tok);
    return it->second;
  };
  auto declared = for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    const auto tok = tokens(line);
    if (tok.size() != 2) throw ParseError(lineno, "expected `src dst`");
    if (tok[0] == tok[1]) throw ParseError(lineno, "self-loop on vertex " + std::string(tok[0]));
    const VertexId s = intern(tok[0]);
    const VertexId d = intern(tok[1]);
    arcs.push_back({s, d});
  });
  if (declared && *declared < out.labels.size()) {
    throw ParseError(1, "more distinct labels than declared n=" + std::to_string(*declared));
  }
  const std::size_t n = declared ? *declared : out.labels.size();
  out.graph = Graph::from_arcs(n, std::move(arcs), &out.duplicates);
  return out;
}

std::string save_edge_list(const Graph& g) {
  std::string out;
  std::size_t implied = 0;
  for (const Arc& a : g.arcs()) implied = std::max<std::size_t>(implied, std::max(a.src, a.dst) + 1);
  if (g.num_arcs() == 0 || implied != g.num_vertices()) out += "n=" + std::to_string(g.num_vertices()) + "\n";
  for (const Arc& a : g.arcs()) {
    out += std::to_string(a.src);
    out += ' ';
    out += std::to_string(a.dst);
    out += '\n';
  }
  return out;
}

void save_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write edge list: " + path);
  out << save_edge_list(g);
}

Graph symmetrize(const Graph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.num_arcs());
  for (const Arc& a : g.arcs()) {
    arcs.push_back(a);
    arcs.push_back({a.dst, a.src});
  }
  return Graph::from_arcs(g.num_vertices(), std::move(arcs));
}

std::vector<std::size_t> out_degree_sequence(const Graph& g) {
  std::vector<std::size_t> deg(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) deg[v] = g.out_degree(v);
  return deg;
}

}  // namespace prank
