#include <cmath>

#include "doctest.h"
#include "lowdiam/audits.hpp"
#include "lowdiam/generate.hpp"
#include "lowdiam/htsd.hpp"
#include "oracles.hpp"

using namespace lowdiam;

namespace {

double exact_diameter(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  double diam = 0.0;
  for (const auto& row : oracle::floyd_warshall(g.universe(), edges)) {
    for (double d : row) diam = std::max(diam, d);
  }
  return diam;
}

}  // namespace

TEST_CASE("single vertex hierarchy") {
  CallLedger ledger;
  RandomStream rs(1, 0);
  const Graph g = make_path(1);
  const Htsd h = build_htsd(g, 4.0, OracleConfig::exact(), rs, ledger);
  CHECK(h.k == 0);
  CHECK(h.levels.size() == 1);
  CHECK(h.levels[0].clusters[0].members == std::vector<Vertex>{0});
  CHECK(audit_htsd(g, h).empty());
  CHECK(ledger.total() == 0);
}

TEST_CASE("htsd input validation") {
  CallLedger ledger;
  RandomStream rs(1, 0);
  CHECK_THROWS(build_htsd(Graph::from_edges(0, {}), 1.0, OracleConfig::exact(), rs, ledger));
  CHECK_THROWS(build_htsd(Graph::from_edges(3, {{0, 1, 1.0}}), 1.0, OracleConfig::exact(), rs, ledger));
}

TEST_CASE("single edge of length 5") {
  const Graph g = Graph::from_edges(2, {{0, 1, 5.0}});
  for (std::uint64_t t = 0; t < 1000; ++t) {
    CallLedger ledger;
    RandomStream rs(2, t);
    const Htsd h = build_htsd(g, 4.0, OracleConfig::exact(), rs, ledger);
    CHECK(h.delta == 2.5);
    CHECK(h.d == std::vector<double>{10.0, 5.0, 2.5, 1.25, 0.625});
    CHECK(h.k == 4);
    const int i = decoupling_level(h, 0);
    CHECK(i >= 0);
    CHECK(i <= 3);
    CHECK(htsd_stretch(h, 0) == h.d[static_cast<std::size_t>(i)] / 5.0);
    CHECK(audit_htsd(g, h, 5.0).empty());
  }
}

TEST_CASE("stretch formula") {
  const Graph g = Graph::from_edges(2, {{0, 1, 5.0}});
  CallLedger ledger;
  RandomStream rs(2, 0);
  Htsd h = build_htsd(g, 4.0, OracleConfig::exact(), rs, ledger);
  h.decoupling[0] = 1;
  CHECK(htsd_stretch(h, 0) == 1.0);
  h.decoupling[0] = 0;
  CHECK(htsd_stretch(h, 0) == 2.0);
  CHECK(htsd_p_stretch(h, 0, 0.5) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS(htsd_p_stretch(h, 0, 1.5));
  CHECK_THROWS(decoupling_level(h, 3));
}

TEST_CASE("grid 8x8 with c = 1") {
  const Graph g = make_grid(8, 8);
  const double diam = exact_diameter(g);
  int low_load = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    CallLedger ledger(true);
    RandomStream rs(8, t);
    const Htsd h = build_htsd(g, 1.0, OracleConfig::exact(), rs, ledger);
    const auto v = audit_htsd(g, h, diam);
    CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front()));
    CHECK(ledger.merged() == recount_merged(ledger.trace()));
    CHECK(ledger.merged() == htsd_merged_calls(h));
    low_load += *std::max_element(h.load.begin(), h.load.end()) <= 60;
  }
  CHECK(low_load >= 198);
}

TEST_CASE("long cycle gives a deep nontrivial hierarchy") {
  const Graph g = make_cycle(1024);
  for (const OracleConfig cfg : {OracleConfig::exact(), OracleConfig::perturbed(0.5)}) {
    CallLedger ledger(true);
    RandomStream rs(21, 0);
    const Htsd h = build_htsd(g, 1.0, cfg, rs, ledger);
    const auto v = audit_htsd(g, h, 512.0);
    CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front()));
    CHECK(h.levels[1].clusters.size() > 1);
    CHECK(h.levels[1].clusters.size() < 1024);
    CHECK(ledger.merged() == recount_merged(ledger.trace()));
  }
}

TEST_CASE("hierarchies on random graphs under both oracles") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 40);
    const auto edges = oracle::random_connected_edges(n, static_cast<int>(n / 2), 3, seed);
    const Graph g = Graph::from_edges(n, edges);
    const double diam = exact_diameter(g);
    for (const OracleConfig cfg : {OracleConfig::exact(), OracleConfig::perturbed(1.0)}) {
      CallLedger ledger;
      RandomStream rs(seed, 4);
      const Htsd h = build_htsd(g, 1.0, cfg, rs, ledger);
      const auto v = audit_htsd(g, h, diam);
      CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front()));
    }
  }
}
