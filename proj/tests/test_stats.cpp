#include <cmath>

#include "doctest.h"
#include "lowdiam/generate.hpp"
#include "lowdiam/stats.hpp"
#include "oracles.hpp"

using namespace lowdiam;

namespace {

// Upper root of (phat - p)^2 = z^2 p (1 - p) / n found by bisection.
double wilson_upper_by_bisection(double phat, double n, double z) {
  double lo = phat;
  double hi = 1.0;
  auto f = [&](double p) { return (phat - p) * (phat - p) - z * z * p * (1.0 - p) / n; };
  if (f(hi) <= 0.0) return 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("wilson interval agrees with the quadratic root") {
  for (double phat : {0.0, 0.005, 0.1, 0.5, 0.93, 1.0}) {
    for (std::uint64_t n : {10ULL, 1000ULL, 10000ULL}) {
      const auto ci = wilson_interval(phat, n);
      CHECK(ci.upper == doctest::Approx(wilson_upper_by_bisection(phat, static_cast<double>(n), 1.96)).epsilon(1e-9));
      CHECK(ci.lower <= ci.estimate);
      CHECK(ci.estimate <= ci.upper);
      CHECK(ci.lower >= 0.0);
      CHECK(ci.upper <= 1.0);
    }
  }
  CHECK_THROWS(wilson_interval(0.5, 0));
  CHECK_THROWS(wilson_interval(1.5, 10));
}

TEST_CASE("compare_bound verdicts") {
  CHECK(compare_bound(0.0, 10000, 0.01).pass);
  CHECK_FALSE(compare_bound(1.0, 10000, 0.5).pass);
  const auto v = compare_bound(50.0 / 10000.0, 10000, 0.0075);
  CHECK(v.pass);
  CHECK(v.upper == doctest::Approx(0.006585).epsilon(1e-3));
  CHECK(v.margin == doctest::Approx(0.0075 - v.upper));
  CHECK_FALSE(compare_bound(0.005, 10000, 0.006).pass);
}

TEST_CASE("mean and standard error") {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  const auto m = estimate_mean(xs);
  CHECK(m.count == 4);
  CHECK(m.mean == 2.5);
  CHECK(m.std_error == doctest::Approx(std::sqrt((2.25 + 0.25 + 0.25 + 2.25) / 3.0 / 4.0)));
  CHECK(estimate_mean(std::vector<double>{}).count == 0);
  CHECK(estimate_mean(std::vector<double>{7.0}).std_error == 0.0);
}

TEST_CASE("mean bound uses the upper confidence limit") {
  const MeanEstimate m{100, 10.0, 0.5};
  CHECK(compare_mean_bound(m, 11.0).pass);
  CHECK_FALSE(compare_mean_bound(m, 10.5).pass);
  CHECK(compare_mean_bound(m, 11.0).upper == doctest::Approx(10.98));
  CHECK_THROWS(compare_mean_bound(MeanEstimate{}, 1.0));
}

TEST_CASE("nearest-rank percentile") {
  std::vector<double> xs;
  for (int i = 100; i >= 1; --i) xs.push_back(i);
  CHECK(percentile(xs, 0.99) == 99.0);
  CHECK(percentile(xs, 1.0) == 100.0);
  CHECK(percentile(xs, 0.001) == 1.0);
  CHECK_THROWS(percentile({}, 0.5));
  CHECK_THROWS(percentile(xs, 0.0));
}

TEST_CASE("generator examples") {
  const Graph p = generate_graph("path(3,1)");
  CHECK(p.order() == 3);
  CHECK(p.size() == 2);
  CHECK(p.edges()[0] == Edge{0, 1, 1.0});
  CHECK(p.edges()[1] == Edge{1, 2, 1.0});

  const Graph c = generate_graph("cycle(4,2)");
  CHECK(c.size() == 4);
  for (const Edge& e : c.edges()) CHECK(e.length == 2.0);

  const Graph grid = generate_graph("grid(3,4)");
  CHECK(grid.order() == 12);
  CHECK(grid.size() == 17);

  const Graph gnp = generate_graph("gnp(64,0.1,10,7)");
  CHECK(gnp.order() == 64);
  CHECK(gnp.is_connected());
  for (const Edge& e : gnp.edges()) {
    CHECK(e.length >= 1.0);
    CHECK(e.length <= 10.0);
    CHECK(e.length == std::floor(e.length));
  }
  CHECK(write_graph(gnp) == write_graph(make_gnp(64, 0.1, 10, 7)));

  CHECK_THROWS(generate_graph("tree(4)"));
  CHECK_THROWS(generate_graph("cycle(2)"));
  CHECK_THROWS(generate_graph("gnp(10,1.5,3,1)"));
  CHECK_THROWS(generate_graph("path(3"));
}

TEST_CASE("sparse random graphs are joined into one component") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = make_gnp(50, 0.01, 5, seed);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const auto labels = oracle::component_labels(50, edges);
    for (int l : labels) CHECK(l == labels[0]);
    const Graph geo = make_geometric(50, 0.05, 10.0, seed);
    CHECK(geo.is_connected());
  }
}

TEST_CASE("standing corpus is connected and sized") {
  const auto corpus = standing_corpus();
  CHECK(corpus.size() == 20);
  for (const auto& entry : corpus) {
    const Graph g = generate_graph(entry.spec);
    CHECK_MESSAGE(g.is_connected(), entry.name);
    CHECK(g.order() >= 16);
    CHECK(g.order() <= 1024);
  }
}
