#include <cmath>

#include "doctest.h"
#include "lowdiam/generate.hpp"
#include "lowdiam/graph.hpp"
#include "oracles.hpp"

using namespace lowdiam;

TEST_CASE("from_edges canonicalizes and assigns ids by position") {
  const Graph g = Graph::from_edges(4, {{2, 1, 3.0}, {0, 3, 1.0}, {1, 0, 2.0}});
  REQUIRE(g.size() == 3);
  CHECK(g.edges()[0] == Edge{0, 1, 2.0});
  CHECK(g.edges()[1] == Edge{0, 3, 1.0});
  CHECK(g.edges()[2] == Edge{1, 2, 3.0});
  CHECK(g.edge_ids()[2] == 2);
  CHECK(g.degree(0) == 2);
  CHECK(g.min_edge_length() == 1.0);
}

TEST_CASE("from_edges rejects invalid input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0, 1.0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1, 1.0}, {1, 0, 2.0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1, 0.0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1, -2.0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3, 1.0}}), GraphError);
}

TEST_CASE("edgeless graph has infinite minimum length") {
  const Graph g = Graph::from_edges(3, {});
  CHECK(std::isinf(g.min_edge_length()));
  CHECK_FALSE(g.is_connected());
}

TEST_CASE("induced subgraph keeps global ids") {
  const Graph g = make_cycle(6);
  const std::vector<Vertex> keep{1, 2, 3, 5};
  const Graph sub = g.induced(keep);
  CHECK(sub.order() == 4);
  CHECK(sub.size() == 2);
  CHECK(sub.universe() == 6);
  CHECK(sub.id(3) == 5);
  CHECK(sub.degree(*sub.local(5)) == 0);
  CHECK(sub.edge_ids()[0] == 2);
  CHECK_FALSE(sub.contains(0));
}

TEST_CASE("exact sssp on a unit path") {
  const Graph g = make_path(3);
  const SsspTree t = exact_sssp(g, 0);
  CHECK(t.dist == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(t.parent[2] == 1);
  CHECK(t.parent_edge[2] == 1);
}

TEST_CASE("exact sssp agrees with Floyd-Warshall on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 30);
    const auto edges = oracle::random_connected_edges(n, static_cast<int>(2 * n), 9, seed);
    const Graph g = Graph::from_edges(n, edges);
    const auto fw = oracle::floyd_warshall(n, edges);
    for (Vertex s = 0; s < n; s += 3) {
      const SsspTree t = exact_sssp(g, s);
      for (Vertex v = 0; v < n; ++v) CHECK(t.distance_to(v) == fw[s][v]);
    }
    const auto apsp = all_pairs_distances(g);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) CHECK(apsp(a, b) == fw[a][b]);
    }
  }
}

TEST_CASE("exact sssp agrees with exhaustive path search on tiny graphs") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 7);
    const auto edges = oracle::random_connected_edges(n, 10, 5, seed);
    const Graph g = Graph::from_edges(n, edges);
    const SsspTree t = exact_sssp(g, 0);
    for (Vertex v = 0; v < n; ++v) CHECK(t.distance_to(v) == oracle::brute_force_distance(n, edges, 0, v));
  }
}

TEST_CASE("sssp tree is a shortest-path tree over graph edges") {
  const auto edges = oracle::random_connected_edges(40, 80, 7, 9);
  const Graph g = Graph::from_edges(40, edges);
  const SsspTree t = exact_sssp(g, 5);
  for (std::size_t x = 0; x < t.node_count(); ++x) {
    if (t.parent[x] == kNone) continue;
    const Edge& e = g.edges()[static_cast<std::size_t>(t.parent_edge[x])];
    CHECK(e.length == t.parent_length[x]);
    CHECK(t.dist[x] == t.dist[static_cast<std::size_t>(t.parent[x])] + e.length);
  }
}

TEST_CASE("ties go to the smaller parent") {
  // 0-1, 0-2, 1-3, 2-3 all unit: vertex 3 must hang below 1.
  const Graph g = Graph::from_edges(4, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
  const SsspTree t = exact_sssp(g, 0);
  CHECK(t.parent[3] == 1);
}

TEST_CASE("contraction takes the shortest parallel edge and distances match") {
  const Graph g = Graph::from_edges(4, {{0, 2, 5.0}, {1, 2, 2.0}, {2, 3, 1.0}});
  const std::vector<Vertex> set{0, 1};
  const SuperSourceGraph sg = contract_into_super_source(g, set);
  CHECK(sg.base().order() == 2);
  CHECK(sg.source_length(*sg.base().local(2)) == 2.0);
  const SsspTree t = exact_sssp(sg);
  CHECK(t.distance_to(2) == 2.0);
  CHECK(t.distance_to(3) == 3.0);
  CHECK(t.ids.back() == kSuperSource);
  CHECK_THROWS_AS(contract_into_super_source(g, std::vector<Vertex>{}), GraphError);
}

TEST_CASE("contracting every vertex leaves only the source") {
  const Graph g = make_path(3);
  const std::vector<Vertex> all{0, 1, 2};
  const SsspTree t = exact_sssp(contract_into_super_source(g, all));
  CHECK(t.node_count() == 1);
  CHECK(t.dist[0] == 0.0);
}

TEST_CASE("attached source with explicit lengths") {
  const Graph g = make_path(4);
  const std::vector<SourceEdge> src{{0, 3.0}, {3, 1.0}};
  const SsspTree t = exact_sssp(attach_super_source(g, src));
  CHECK(t.distance_to(1) == 3.0);
  CHECK(t.distance_to(2) == 2.0);
  CHECK(t.distance_to(0) == 3.0);
}

TEST_CASE("weak diameter measures in the whole graph") {
  const Graph g = make_cycle(8);
  const std::vector<Vertex> s{0, 4};
  CHECK(weak_diameter(g, s) == 4.0);
}

TEST_CASE("apsp cap is enforced") {
  CHECK_THROWS_AS(all_pairs_distances(make_path(10), 5), GraphError);
}

TEST_CASE("parse and write round trip") {
  const Graph g = parse_graph("# demo\np 4 3\ne 2 1 3\ne 0 3 1\ne 1 0 2\n");
  CHECK(write_graph(g) == "p 4 3\ne 0 1 2\ne 0 3 1\ne 1 2 3\n");
  const Graph again = parse_graph(write_graph(g));
  CHECK(again.size() == 3);
  CHECK(again.edges()[2] == g.edges()[2]);
}

TEST_CASE("parser errors name the line") {
  auto message = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const GraphError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("p 3 1\ne 0 1 x\n").find("line 2") != std::string::npos);
  CHECK(message("p 3 1\ne 0 1 0\n").find("non-positive") != std::string::npos);
  CHECK(message("p 3 1\ne 0 1 1.5\n").find("non-integer") != std::string::npos);
  CHECK(message("p 3 1\ne 1 1 1\n").find("self-loop") != std::string::npos);
  CHECK(message("e 0 1 1\n").find("before header") != std::string::npos);
  CHECK(message("p 3 1\ne 0 5 1\n").find("out of range") != std::string::npos);
  CHECK(message("p 3 2\ne 0 1 1\n").find("found 1") != std::string::npos);
  CHECK(message("p 3 2\ne 0 1 1\ne 1 0 2\n").find("duplicate") != std::string::npos);
  CHECK(message("x 1\n").find("unknown") != std::string::npos);
  CHECK(!message("").empty());
}

TEST_CASE("disconnected input parses") {
  const Graph g = parse_graph("p 4 1\ne 0 1 1\n");
  CHECK_FALSE(g.is_connected());
  CHECK(g.order() == 4);
}
