#include "doctest.h"
#include "lowdiam/audits.hpp"
#include "lowdiam/decompose.hpp"
#include "lowdiam/generate.hpp"
#include "oracles.hpp"

using namespace lowdiam;

TEST_CASE("derived parameters") {
  const DecomposeParams p = DecomposeParams::make(8.0, 4.0, 16);
  CHECK(p.beta() == 2.0);
  CHECK(p.long_edge_threshold() == doctest::Approx(1.0 / 80.0));
  CHECK(p.eps() == doctest::Approx(1.0 / 64.0));
  CHECK(p.blur_alpha() == doctest::Approx(0.125));
  CHECK(p.max_iterations() == 1024);
  CHECK_THROWS(DecomposeParams::make(0.0, 4.0, 16));
  CHECK_THROWS(DecomposeParams::make(8.0, 0.5, 16));
}

TEST_CASE("single vertex is one trivial cluster with no oracle calls") {
  CallLedger ledger;
  RandomStream rs(1, 0);
  const Tsd tsd = ts_decompose(make_path(1), DecomposeParams::make(4.0, 4.0, 1), OracleConfig::exact(), rs, ledger);
  REQUIRE(tsd.clusters.size() == 1);
  CHECK(tsd.clusters[0].members == std::vector<Vertex>{0});
  CHECK(tsd.clusters[0].tree.edges.empty());
  CHECK(ledger.total() == 0);
}

TEST_CASE("small budget deletes every unit edge") {
  const Graph g = make_cycle(16);
  CallLedger ledger;
  RandomStream rs(1, 0);
  const DecomposeParams p = DecomposeParams::make(8.0, 4.0, 16);
  const Tsd tsd = ts_decompose(g, p, OracleConfig::exact(), rs, ledger);
  CHECK(tsd.clusters.size() == 16);
  CHECK(tsd.deleted_edges.size() == 16);
  CHECK(tsd.cut_edges.size() == 16);
  CHECK(tsd.iterations == 0);
  CHECK(ledger.total() == 0);
  CHECK(audit_tsd(g, p, tsd).empty());
}

TEST_CASE("cycle C_64 with c = 1 and a large budget") {
  const Graph g = make_cycle(64);
  const DecomposeParams p = DecomposeParams::make(512.0, 1.0, 64);
  CHECK(p.long_edge_threshold() >= 1.0);
  double iterations = 0.0;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    CallLedger ledger;
    RandomStream rs(17, static_cast<std::uint64_t>(t));
    const Tsd tsd = ts_decompose(g, p, OracleConfig::exact(), rs, ledger);
    CHECK(audit_tsd(g, p, tsd).empty());
    CHECK(max_tree_diameter(tsd) <= 512.0);
    iterations += tsd.iterations;
  }
  CHECK(iterations / trials <= 6.0);
}

TEST_CASE("structure holds on random graphs under both oracles") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 40);
    const auto edges = oracle::random_connected_edges(n, static_cast<int>(n), 6, seed);
    const Graph g = Graph::from_edges(n, edges);
    const DecomposeParams p = DecomposeParams::make(40.0 + static_cast<double>(seed % 5) * 100.0, 1.0, static_cast<std::size_t>(n));
    for (const OracleConfig cfg : {OracleConfig::exact(), OracleConfig::perturbed(1.0)}) {
      CallLedger ledger(true);
      RandomStream rs(seed, 9);
      const Tsd tsd = ts_decompose(g, p, cfg, rs, ledger);
      const auto v = audit_tsd(g, p, tsd);
      CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front()));
      CHECK(ledger.merged() == recount_merged(ledger.trace()));
      // Cut set recomputed independently from the partition.
      std::vector<int> owner(static_cast<std::size_t>(n), -1);
      for (std::size_t c = 0; c < tsd.clusters.size(); ++c) {
        for (Vertex x : tsd.clusters[c].members) owner[static_cast<std::size_t>(x)] = static_cast<int>(c);
      }
      std::size_t cut = 0;
      for (const auto& e : g.edges()) cut += owner[static_cast<std::size_t>(e.u)] != owner[static_cast<std::size_t>(e.v)];
      CHECK(cut == tsd.cut_edges.size());
    }
  }
}

TEST_CASE("decomposition accepts disconnected graphs") {
  const Graph g = Graph::from_edges(6, {{0, 1, 1.0}, {1, 2, 1.0}, {3, 4, 1.0}});
  CallLedger ledger;
  RandomStream rs(4, 0);
  const DecomposeParams p = DecomposeParams::make(300.0, 1.0, 6);
  const Tsd tsd = ts_decompose(g, p, OracleConfig::exact(), rs, ledger);
  CHECK(audit_tsd(g, p, tsd).empty());
}

TEST_CASE("iteration cap aborts") {
  const Graph g = make_cycle(64);
  DecomposeParams p = DecomposeParams::make(512.0, 1.0, 64);
  p.iteration_cap = 1;
  int aborted = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    CallLedger ledger;
    RandomStream rs(5, t);
    try {
      ts_decompose(g, p, OracleConfig::exact(), rs, ledger);
    } catch (const IterationCapExceeded& e) {
      CHECK(e.cap() == 1);
      ++aborted;
    }
  }
  CHECK(aborted > 0);
}

TEST_CASE("same stream gives the same decomposition") {
  const Graph g = make_grid(8, 8);
  const DecomposeParams p = DecomposeParams::make(512.0, 2.0, 64);
  CallLedger l1;
  CallLedger l2;
  RandomStream a(3, 3);
  RandomStream b(3, 3);
  const Tsd x = ts_decompose(g, p, OracleConfig::perturbed(0.2), a, l1);
  const Tsd y = ts_decompose(g, p, OracleConfig::perturbed(0.2), b, l2);
  CHECK(x.assignment(64) == y.assignment(64));
  CHECK(x.cut_edges == y.cut_edges);
  CHECK(l1.total() == l2.total());
}
