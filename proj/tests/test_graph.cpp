#include <doctest.h>

#include <fstream>
#include <sstream>

#include "distlap/enumerate.hpp"
#include "distlap/errors.hpp"
#include "distlap/graph.hpp"
#include "oracles.hpp"

using namespace distlap;

namespace {

Graph load(const std::string& name) {
  std::ifstream in(std::string(DISTLAP_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return parse_edge_list(s.str());
}

}  // namespace

TEST_CASE("graph construction canonicalises and validates") {
  Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(2, 3));
  CHECK(g.neighbors(0) == std::vector<int>{1, 3});

  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("named families") {
  CHECK(Graph::complete(5).size() == 10);
  CHECK(Graph::complete(5).is_complete());
  CHECK(Graph::complete(1).is_complete());
  CHECK(Graph::path(4).is_tree());
  CHECK(Graph::star(6).is_tree());
  CHECK_FALSE(Graph::cycle(5).is_tree());
  CHECK(Graph::cycle(5).size() == 5);
  CHECK(Graph(1).is_tree());
  CHECK_FALSE(Graph(3, {{0, 1}}).is_tree());
}

TEST_CASE("edge-list parsing") {
  SUBCASE("zero-based default, comments and commas") {
    const auto g = parse_edge_list("# triangle\n3\n0 1\n1,2  # chord\n\n2 0\n");
    CHECK(g == Graph::complete(3));
  }
  SUBCASE("one-based header") {
    CHECK(parse_edge_list("3 1\n1 2\n2 3\n") == Graph::path(3));
  }
  SUBCASE("errors carry line numbers") {
    try {
      parse_edge_list("3\n0 1\n1 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    try {
      parse_edge_list("3\n0 1\n1 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
  }
  SUBCASE("format round trip") {
    const Graph g = Graph::cycle(6);
    CHECK(parse_edge_list(format_edge_list(g)) == g);
  }
}

TEST_CASE("distances match Floyd-Warshall on every connected graph n <= 5") {
  for (int n = 1; n <= 5; ++n)
    enumerate_connected(n, false, [&](const Graph& g) {
      const auto dd = compute_distance_data(g);
      const auto fw = oracle::floyd_warshall(g);
      std::int64_t w = 0;
      for (int i = 0; i < n; ++i) {
        std::int64_t tr = 0, ecc = 0, sdd = 0;
        for (int j = 0; j < n; ++j) {
          REQUIRE(dd.dist(i, j) == fw[i][j]);
          tr += fw[i][j];
          ecc = std::max(ecc, fw[i][j]);
        }
        for (int j = 0; j < n; ++j) {
          std::int64_t trj = 0;
          for (int k = 0; k < n; ++k) trj += fw[j][k];
          sdd += fw[i][j] * trj;
        }
        CHECK(dd.tr(i) == tr);
        CHECK(dd.p(i) == ecc);
        CHECK(dd.sdd(i) == sdd);
        w += tr;
      }
      CHECK(dd.wiener * 2 == w);
    });
}

TEST_CASE("hand-computed distance data") {
  const auto p3 = compute_distance_data(Graph::path(3));
  CHECK(p3.tr == IntVector{{3, 2, 3}});
  CHECK(p3.p == IntVector{{2, 1, 2}});
  CHECK(p3.wiener == 4);

  const auto ex1 = compute_distance_data(load("ex1.edges"));
  CHECK(ex1.tr == IntVector{{4, 6, 5, 5, 6}});
  CHECK(ex1.wiener == 13);
  CHECK(ex1.p == IntVector{{1, 2, 2, 2, 2}});

  const auto k1 = compute_distance_data(Graph(1));
  CHECK(k1.wiener == 0);
  CHECK(k1.p == IntVector::Zero(1));
}

TEST_CASE("disconnected input is rejected") {
  const Graph g(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(g));
  CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, -1, -1});
  CHECK_THROWS_AS(compute_distance_data(g), DisconnectedGraph);
}

TEST_CASE("transmission regularity") {
  CHECK(transmission_regularity(compute_distance_data(Graph::cycle(7))) == 12);
  CHECK(transmission_regularity(compute_distance_data(load("ex2.edges"))) == 14);
  CHECK_FALSE(transmission_regularity(compute_distance_data(Graph::path(4))));

  // Ex2 is transmission regular but not degree regular
  const Graph ex2 = load("ex2.edges");
  std::size_t lo = 100, hi = 0;
  for (int v = 0; v < ex2.order(); ++v) {
    lo = std::min(lo, ex2.neighbors(v).size());
    hi = std::max(hi, ex2.neighbors(v).size());
  }
  CHECK(lo < hi);
  CHECK(compute_distance_data(ex2).wiener == 63);
}

TEST_CASE("twelve-vertex fixtures") {
  const auto g1 = compute_distance_data(load("g1.edges"));
  CHECK(g1.wiener == 152);
  CHECK(g1.tr == IntVector{{26, 26, 24, 24, 26, 26, 24, 26, 26, 26, 24, 26}});
  CHECK(load("ntr.edges") == load("g1.edges"));

  const Graph g2 = load("g2.edges");
  for (int v = 0; v < 12; ++v) CHECK(g2.neighbors(v).size() == 3);
  const auto d2 = compute_distance_data(g2);
  CHECK(d2.wiener == 142);
  CHECK(d2.tr == IntVector{{26, 22, 22, 22, 24, 24, 24, 24, 24, 24, 24, 24}});

  const auto g3 = compute_distance_data(load("g3.edges"));
  CHECK(g3.wiener == 136);
  CHECK(g3.tr == IntVector{{24, 22, 22, 22, 24, 22, 24, 22, 22, 22, 22, 24}});
}
