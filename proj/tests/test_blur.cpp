#include <cmath>

#include "doctest.h"
#include "lowdiam/audits.hpp"
#include "lowdiam/blur.hpp"
#include "lowdiam/generate.hpp"
#include "lowdiam/stats.hpp"
#include "oracles.hpp"

using namespace lowdiam;

TEST_CASE("blur parameter validation") {
  CHECK_THROWS(BlurParams::with_alpha(1.0, 0.6));
  CHECK_THROWS(BlurParams::with_alpha(1.0, 0.0));
  CHECK_THROWS(BlurParams::with_alpha(0.0, 0.25));
  BlurParams p = BlurParams::with_alpha(1.0, 0.25);
  p.eps = 0.07;
  CHECK_THROWS(p.validate());
  CHECK(BlurParams::for_graph(3.0, 64).alpha == doctest::Approx(1.0 / 12.0));
  CHECK(BlurParams::for_graph(3.0, 1).alpha == 0.5);
}

TEST_CASE("edgeless graph leaves the seed untouched") {
  const Graph g = Graph::from_edges(4, {});
  CallLedger ledger;
  RandomStream rs(1, 0);
  const std::vector<Vertex> b{1, 3};
  const BlurResult r = blur(g, BlurParams::with_alpha(5.0, 0.5), b, OracleConfig::exact(), rs, ledger);
  CHECK(r.set == b);
  CHECK(r.trace.rounds.empty());
  CHECK(ledger.total() == 0);
}

TEST_CASE("radius below the shortest edge runs no round") {
  const Graph g = make_path(2);
  CallLedger ledger;
  RandomStream rs(1, 0);
  const std::vector<Vertex> b{0};
  const BlurResult r = blur(g, BlurParams::with_alpha(0.5, 0.5), b, OracleConfig::exact(), rs, ledger);
  CHECK(r.set == b);
  CHECK(ledger.total() == 0);
}

TEST_CASE("empty seed returns the empty set") {
  CallLedger ledger;
  RandomStream rs(1, 0);
  const BlurResult r = blur(make_path(5), BlurParams::with_alpha(5.0, 0.5), std::vector<Vertex>{}, OracleConfig::exact(),
                            rs, ledger);
  CHECK(r.set.empty());
}

TEST_CASE("round count follows the loop guard") {
  for (double rho : {1.0, 2.0, 7.5, 10.0, 64.0, 100.0}) {
    for (double alpha : {0.5, 0.25, 0.1}) {
      const BlurParams p = BlurParams::with_alpha(rho, alpha);
      int expect = 0;
      for (int i = 0; std::pow(alpha, i) * rho >= 1.0; ++i) ++expect;
      CHECK(blur_round_count(p, 1.0) == expect);
      CallLedger ledger;
      RandomStream rs(2, 0);
      const BlurResult r = blur(make_path(30), p, std::vector<Vertex>{0}, OracleConfig::exact(), rs, ledger);
      CHECK(static_cast<int>(r.trace.rounds.size()) == expect);
      CHECK(ledger.total() == static_cast<std::uint64_t>(expect));
    }
  }
}

TEST_CASE("blur on a path stays within rho/(1-alpha) and respects the cut bound") {
  const Graph g = make_path(50);
  const BlurParams p = BlurParams::with_alpha(10.0, 0.25);
  const std::uint64_t trials = 10000;
  std::vector<std::uint64_t> cut(g.size(), 0);
  bool contained = true;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CallLedger ledger;
    RandomStream rs(9, t);
    const BlurResult r = blur(g, p, std::vector<Vertex>{0}, OracleConfig::exact(), rs, ledger);
    contained = contained && r.set.back() <= 13;
    std::vector<char> in(50, 0);
    for (Vertex v : r.set) in[static_cast<std::size_t>(v)] = 1;
    for (std::size_t e = 0; e < g.size(); ++e) cut[e] += in[e] != in[e + 1];
  }
  CHECK(contained);
  for (std::size_t e = 0; e < g.size(); ++e) {
    const double f = static_cast<double>(cut[e]) / trials;
    CHECK(f <= 50.0 * 1.0 / 10.0 + 3.0 * std::sqrt(f * (1 - f) / trials));
  }
}

TEST_CASE("containment, monotone trace and safety on random graphs under both oracles") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Vertex n = 3 + static_cast<Vertex>(seed % 25);
    const auto edges = oracle::random_connected_edges(n, static_cast<int>(n), 4, seed);
    const Graph g = Graph::from_edges(n, edges);
    const BlurParams p = BlurParams::for_graph(2.0 + static_cast<double>(seed % 9), static_cast<std::size_t>(n));
    const std::vector<Vertex> b{0, n / 2};
    for (const OracleConfig cfg : {OracleConfig::exact(), OracleConfig::perturbed(p.eps)}) {
      CallLedger ledger;
      RandomStream rs(seed, 5);
      const BlurResult r = blur(g, p, b, cfg, rs, ledger);
      CHECK(audit_blur(g, p, b, r).empty());
      CHECK(audit_blur_safety(g, p, r).empty());
      // dist(b, v) <= rho/(1-alpha) against Floyd-Warshall.
      const auto fw = oracle::floyd_warshall(n, edges);
      for (Vertex v : r.set) {
        const double d = std::min(fw[0][static_cast<std::size_t>(v)], fw[static_cast<std::size_t>(n / 2)][static_cast<std::size_t>(v)]);
        CHECK(d <= p.radius_bound() + 1e-9);
      }
    }
  }
}

TEST_CASE("blur rounds carry merge tags") {
  CallLedger ledger(true);
  RandomStream rs(3, 0);
  CallTag tag;
  tag.level = 2;
  tag.iteration = 5;
  tag.batched = true;
  blur(make_path(40), BlurParams::with_alpha(20.0, 0.25), std::vector<Vertex>{0}, OracleConfig::exact(), rs, ledger, tag);
  REQUIRE(ledger.trace().size() == 3);
  CHECK(ledger.trace()[0].tag.step == 2);
  CHECK(ledger.trace()[2].tag.step == 4);
  CHECK(ledger.trace()[1].tag.level == 2);
  CHECK(ledger.merged() == 0);
  CHECK(ledger.by_phase().at("blur_round_1") == 1);
}
