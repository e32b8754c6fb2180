#include <cmath>
#include <memory>

#include "doctest.h"
#include "lowdiam/generate.hpp"
#include "lowdiam/harness.hpp"

using namespace lowdiam;

namespace {

TrialConfig config(Graph g, Algorithm a) {
  TrialConfig cfg;
  cfg.graph = std::make_shared<const Graph>(std::move(g));
  cfg.algorithm = a;
  cfg.seed = 11;
  return cfg;
}

void check_same(const TrialStats& a, const TrialStats& b) {
  CHECK(a.completed == b.completed);
  REQUIRE(a.cut_frequency.size() == b.cut_frequency.size());
  for (std::size_t e = 0; e < a.cut_frequency.size(); ++e) CHECK(a.cut_frequency[e].hits == b.cut_frequency[e].hits);
  CHECK(a.iteration_histogram == b.iteration_histogram);
  CHECK(a.load_histogram == b.load_histogram);
  CHECK(a.stretch.mean == b.stretch.mean);
  CHECK(a.p_stretch.mean == b.p_stretch.mean);
  CHECK(a.oracle_merged == b.oracle_merged);
  CHECK(a.by_phase == b.by_phase);
}

}  // namespace

TEST_CASE("blur on an edgeless graph") {
  TrialConfig cfg = config(Graph::from_edges(5, {}), Algorithm::kBlur);
  cfg.rho = 3.0;
  cfg.trials = 100;
  const TrialStats s = run_trials(cfg);
  CHECK(s.cut_frequency.empty());
  CHECK(s.failures.empty());
  CHECK(s.completed == 100);
}

TEST_CASE("results do not depend on the pool width") {
  for (Algorithm a : {Algorithm::kBlur, Algorithm::kDecompose, Algorithm::kProjected, Algorithm::kHst}) {
    TrialConfig cfg = config(make_grid(5, 5), a);
    cfg.rho = 4.0;
    cfg.delta = 64.0;
    cfg.c = 1.0;
    cfg.trials = 40;
    cfg.oracle = OracleConfig::perturbed(0.1);
    cfg.threads = 1;
    const TrialStats one = run_trials(cfg);
    cfg.threads = 4;
    const TrialStats four = run_trials(cfg);
    check_same(one, four);
    CHECK(one.audit_failures == 0);
  }
}

TEST_CASE("trial outcome is a function of (seed, index)") {
  TrialConfig cfg = config(make_cycle(64), Algorithm::kDecompose);
  cfg.delta = 512.0;
  cfg.c = 2.0;
  const TrialOutcome a = run_single_trial(cfg, 17);
  const TrialOutcome b = run_single_trial(cfg, 17);
  const TrialOutcome c = run_single_trial(cfg, 18);
  CHECK(a.fingerprint == b.fingerprint);
  CHECK(a.cut == b.cut);
  CHECK(a.fingerprint != c.fingerprint);
}

TEST_CASE("frequencies and histograms are consistent") {
  TrialConfig cfg = config(make_cycle(64), Algorithm::kDecompose);
  cfg.delta = 512.0;
  cfg.c = 2.0;
  cfg.trials = 200;
  const TrialStats s = run_trials(cfg);
  std::uint64_t hist = 0;
  for (const auto& [it, count] : s.iteration_histogram) hist += count;
  CHECK(hist == s.completed);
  CHECK(s.completed + (s.failures.size() - s.audit_failures) == s.trials);
  std::uint64_t loads = 0;
  for (const auto& [l, count] : s.load_histogram) loads += count;
  CHECK(loads == s.completed * 64);
  for (const auto& f : s.cut_frequency) {
    CHECK(f.interval.estimate >= 0.0);
    CHECK(f.interval.estimate <= 1.0);
    CHECK(f.interval.lower <= f.interval.estimate);
    CHECK(f.interval.estimate <= f.interval.upper);
  }
}

TEST_CASE("failure events are logged and reproducible") {
  TrialConfig cfg = config(make_cycle(64), Algorithm::kDecompose);
  cfg.delta = 512.0;
  cfg.c = 1.0;
  cfg.iteration_cap = 1;
  cfg.trials = 50;
  const TrialStats s = run_trials(cfg);
  REQUIRE_FALSE(s.failures.empty());
  for (const auto& f : s.failures) {
    CHECK_FALSE(f.audit);
    const TrialOutcome again = run_single_trial(cfg, f.key);
    CHECK(again.fingerprint == f.fingerprint);
    CHECK(again.failure == f.what);
  }
}

TEST_CASE("hierarchy trials report stretch and domination") {
  TrialConfig cfg = config(make_cycle(16), Algorithm::kProjected);
  cfg.c = 1.0;
  cfg.trials = 20;
  const TrialStats s = run_trials(cfg);
  CHECK(s.domination_pairs == 20 * 16 * 15 / 2);
  CHECK(s.domination_violations == 0);
  CHECK(s.stretch.mean >= 1.0);
  CHECK(s.p_stretch.mean <= s.stretch.mean);
  CHECK(s.edge_stretch_mean.size() == 16);
}

TEST_CASE("config validation") {
  TrialConfig cfg = config(make_path(4), Algorithm::kDecompose);
  cfg.trials = 0;
  CHECK_THROWS(run_trials(cfg));
  cfg.trials = 1;
  cfg.p = 0.0;
  CHECK_THROWS(run_trials(cfg));
  cfg.p = 0.5;
  cfg.delta = -1.0;
  CHECK_THROWS(run_trials(cfg));
  TrialConfig h = config(Graph::from_edges(3, {{0, 1, 1.0}}), Algorithm::kHtsd);
  CHECK_THROWS(run_trials(h));
  TrialConfig b = config(make_path(4), Algorithm::kBlur);
  b.seed_set = {9};
  CHECK_THROWS(run_trials(b));
  CHECK(parse_algorithm("hst") == Algorithm::kHst);
  CHECK_THROWS(parse_algorithm("frt"));
}
