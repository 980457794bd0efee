#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "prank/generate.hpp"
#include "prank/graph.hpp"

using namespace prank;

TEST_CASE("edge list parsing") {
  SUBCASE("plain lines") {
    const auto r = load_edge_list("0 1\n1 2");
    CHECK(r.graph.num_vertices() == 3);
    CHECK(r.graph.num_arcs() == 2);
    CHECK(r.graph.has_arc(0, 1));
    CHECK(r.graph.has_arc(1, 2));
    CHECK_FALSE(r.graph.has_arc(1, 0));
    CHECK(r.duplicates == 0);
  }
  SUBCASE("duplicates collapse and are counted") {
    const auto r = load_edge_list("0 1\n0 1");
    CHECK(r.graph.num_vertices() == 2);
    CHECK(r.graph.num_arcs() == 1);
    CHECK(r.duplicates == 1);
  }
  SUBCASE("tabs, comments, blank lines and a header") {
    const auto r = load_edge_list("# comment\nn=6\n\n2\t4   # trailing\n0 5\n");
    CHECK(r.graph.num_vertices() == 6);
    CHECK(r.graph.num_arcs() == 2);
    CHECK(r.graph.has_arc(2, 4));
  }
  SUBCASE("self-loop is rejected with its line") {
    try {
      load_edge_list("3 3");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("malformed lines report their line number") {
    try {
      load_edge_list("0 1\n# ok\n1 x\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(load_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(load_edge_list("-1 2\n"), ParseError);
  }
  SUBCASE("ids beyond the declared n") {
    CHECK_THROWS_AS(load_edge_list("n=3\n0 3\n"), ParseError);
  }
  SUBCASE("labeled endpoints map in order of appearance") {
    const auto r = load_labeled_edge_list("alice bob\nbob carol\nalice bob\n");
    CHECK(r.graph.num_vertices() == 3);
    CHECK(r.labels == std::vector<std::string>{"alice", "bob", "carol"});
    CHECK(r.duplicates == 1);
    CHECK(r.graph.has_arc(1, 2));
  }
}

TEST_CASE("edge list writing") {
  CHECK(save_edge_list(Graph::from_arcs(2, {{1, 0}})) == "1 0\n");
  CHECK(save_edge_list(Graph::empty(0)) == "n=0\n");
  CHECK(save_edge_list(Graph::from_arcs(3, {{2, 0}, {0, 1}})) == "0 1\n2 0\n");
  // Isolated trailing vertices need the header to survive a round trip.
  const Graph g = Graph::from_arcs(5, {{0, 1}});
  CHECK(load_edge_list(save_edge_list(g)).graph == g);
}

TEST_CASE("round trip on generated graphs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = gen_erdos_renyi(1 + seed % 13, 0.3, seed);
    CHECK(load_edge_list(save_edge_list(g)).graph == g);
  }
  for (std::size_t n : {0u, 1u, 4u}) CHECK(load_edge_list(save_edge_list(Graph::empty(n))).graph == Graph::empty(n));
}

TEST_CASE("graph construction validates arcs") {
  CHECK_THROWS_AS(Graph::from_arcs(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_arcs(2, {{0, 2}}), std::invalid_argument);
  std::size_t dup = 0;
  const Graph g = Graph::from_arcs(3, {{2, 1}, {0, 1}, {2, 1}}, &dup);
  CHECK(dup == 1);
  CHECK(g.arcs()[0] == Arc{0, 1});
  CHECK(g.in_degree(1) == 2);
  CHECK(g.out_degree(2) == 1);
}

TEST_CASE("symmetrize") {
  const Graph s = symmetrize(Graph::from_arcs(2, {{0, 1}}));
  CHECK(s == Graph::from_arcs(2, {{0, 1}, {1, 0}}));
  CHECK(symmetrize(s) == s);
  CHECK(symmetrize(Graph::empty(3)) == Graph::empty(3));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_erdos_renyi(12, 0.2, seed);
    CHECK(symmetrize(symmetrize(g)) == symmetrize(g));
  }
}

TEST_CASE("out-degree sequence") {
  CHECK(out_degree_sequence(Graph::from_arcs(3, {{0, 1}, {0, 2}})) == std::vector<std::size_t>{2, 0, 0});
  CHECK(out_degree_sequence(Graph::complete(4)) == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(out_degree_sequence(Graph::empty(3)) == std::vector<std::size_t>{0, 0, 0});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_erdos_renyi(15, 0.3, seed);
    const auto d = out_degree_sequence(g);
    CHECK(std::accumulate(d.begin(), d.end(), std::size_t{0}) == g.num_arcs());
  }
}
