#include <cmath>

#include "doctest.h"
#include "lowdiam/decompose.hpp"
#include "lowdiam/generate.hpp"
#include "lowdiam/oracle.hpp"
#include "oracles.hpp"

using namespace lowdiam;

TEST_CASE("exact oracle on a path") {
  CallLedger ledger;
  RandomStream rs(1, 0);
  const SsspTree t = approx_sssp(make_path(3), 0, OracleConfig::exact(), rs, ledger);
  CHECK(t.dist == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(ledger.total() == 1);
  CHECK(ledger.merged() == 1);
}

TEST_CASE("fresh ledger is zero") {
  const LedgerReport r = ledger_report(CallLedger{});
  CHECK(r.total == 0);
  CHECK(r.merged == 0);
  CHECK(r.by_phase.empty());
}

TEST_CASE("oracle config validation") {
  CHECK_THROWS(OracleConfig::perturbed(0.0));
  CHECK_THROWS(OracleConfig::perturbed(-1.0));
  CHECK(OracleConfig::exact().with_eps(0.3).is_exact());
  CHECK(OracleConfig::perturbed(0.5).with_eps(0.1).eps == 0.1);
  CHECK(parse_oracle_mode("perturbed") == OracleMode::kPerturbed);
  CHECK_THROWS(parse_oracle_mode("fuzzy"));
}

TEST_CASE("perturbed oracle sandwich against exact distances") {
  const double eps = 0.25;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 40);
    const auto edges = oracle::random_connected_edges(n, static_cast<int>(n), 9, seed);
    const Graph g = Graph::from_edges(n, edges);
    const auto fw = oracle::floyd_warshall(n, edges);
    CallLedger ledger;
    RandomStream rs(seed, 1);
    const SsspTree t = approx_sssp(g, 0, OracleConfig::perturbed(eps), rs, ledger);
    bool ok = true;
    for (Vertex v = 0; v < n; ++v) {
      const double d = fw[0][static_cast<std::size_t>(v)];
      const double dt = t.distance_to(v);
      ok = ok && dt >= d && dt <= (1.0 + eps) * d + 1e-12;
    }
    CHECK(ok);
  }
}

TEST_CASE("perturbed oracle sandwich with a super-source") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Vertex n = 3 + static_cast<Vertex>(seed % 30);
    const auto edges = oracle::random_connected_edges(n, static_cast<int>(n), 9, seed);
    const Graph g = Graph::from_edges(n, edges);
    std::vector<double> src(static_cast<std::size_t>(n), kInfinity);
    src[0] = 2.5;
    src[static_cast<std::size_t>(n - 1)] = 1.0;
    const SuperSourceGraph sg(g, src);
    const SsspTree exact = exact_sssp(sg);
    CallLedger ledger;
    RandomStream rs(seed, 2);
    const SsspTree t = approx_sssp(sg, OracleConfig::perturbed(0.1), rs, ledger);
    for (Vertex v = 0; v < n; ++v) {
      CHECK(t.distance_to(v) >= exact.distance_to(v));
      CHECK(t.distance_to(v) <= 1.1 * exact.distance_to(v) + 1e-12);
    }
  }
}

TEST_CASE("perturbed oracle genuinely deviates from shortest paths") {
  // Going 0-1-2-3 costs 3, the direct edge 0-3 costs 2.9.
  const Graph g = Graph::from_edges(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 2.9}});
  int long_way = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    CallLedger ledger;
    RandomStream rs(seed, 0);
    const SsspTree t = approx_sssp(g, 0, OracleConfig::perturbed(0.25), rs, ledger);
    if (t.distance_to(3) == 3.0) ++long_way;
  }
  CHECK(long_way > 0);
  CHECK(long_way < 2000);
}

TEST_CASE("unit scales reproduce the exact tree bit for bit") {
  const auto edges = oracle::random_connected_edges(50, 120, 9, 5);
  const Graph g = Graph::from_edges(50, edges);
  const std::vector<double> ones(g.size(), 1.0);
  SsspTree scaled = detail::dijkstra(g, false, {}, 0, ones, {});
  detail::remeasure(scaled);
  const SsspTree exact = exact_sssp(g, 0);
  CHECK(scaled.dist == exact.dist);
  CHECK(scaled.parent == exact.parent);
  CHECK(scaled.order == exact.order);
}

TEST_CASE("diameter estimates") {
  CallLedger ledger;
  RandomStream rs(0, 0);
  CHECK(approximate_diameter(make_path(4), OracleConfig::exact(), rs, ledger).delta == 1.5);
  const auto c8 = approximate_diameter(make_cycle(8), OracleConfig::exact(), rs, ledger);
  CHECK(c8.delta == 2.0);
  CHECK(c8.source == 0);
  CHECK(approximate_diameter(make_path(1), OracleConfig::exact(), rs, ledger).delta == 0.0);
  CHECK_THROWS(approximate_diameter(Graph::from_edges(3, {{0, 1, 1.0}}), OracleConfig::exact(), rs, ledger));
  CHECK_THROWS(approximate_diameter(make_path(3), OracleConfig::perturbed(1.5), rs, ledger));
}

TEST_CASE("diameter estimate lies in [diam/4, diam] under both oracles") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 50);
    const auto edges = oracle::random_connected_edges(n, static_cast<int>(n / 2), 9, seed);
    const Graph g = Graph::from_edges(n, edges);
    const auto fw = oracle::floyd_warshall(n, edges);
    double diam = 0.0;
    for (const auto& row : fw) {
      for (double d : row) diam = std::max(diam, d);
    }
    for (const OracleConfig cfg : {OracleConfig::exact(), OracleConfig::perturbed(1.0)}) {
      CallLedger ledger;
      RandomStream rs(seed, 3);
      const double delta = approximate_diameter(g, cfg, rs, ledger).delta;
      CHECK(delta >= diam / 4.0);
      CHECK(delta <= diam);
    }
  }
}

TEST_CASE("decomposition ledger matches the trace recount") {
  const Graph k4 = Graph::from_edges(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CallLedger ledger(true);
    RandomStream rs(seed, 0);
    const Tsd tsd = ts_decompose(k4, DecomposeParams::make(256.0, 1.0, 4), OracleConfig::exact(), rs, ledger);
    CHECK(ledger.merged() == recount_merged(ledger.trace()));
    CHECK(ledger.merged() == tsd.merged_calls());
    CHECK(ledger.total() >= ledger.merged());
    std::uint64_t blur_max = 0;
    for (int s : tsd.schedule) blur_max += static_cast<std::uint64_t>(s - 2);
    CHECK(ledger.merged() == 2 * static_cast<std::uint64_t>(tsd.iterations) + blur_max);
  }
}
