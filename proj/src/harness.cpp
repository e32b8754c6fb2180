#include "lowdiam/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <set>
#include <thread>

#include "lowdiam/audits.hpp"
#include "lowdiam/blur.hpp"
#include "lowdiam/decompose.hpp"
#include "lowdiam/embed.hpp"
#include "lowdiam/htsd.hpp"

namespace lowdiam {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kBlur: return "blur";
    case Algorithm::kDecompose: return "decompose";
    case Algorithm::kHtsd: return "htsd";
    case Algorithm::kProjected: return "projected";
    case Algorithm::kHst: return "hst";
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kBlur, Algorithm::kDecompose, Algorithm::kHtsd, Algorithm::kProjected, Algorithm::kHst}) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

void TrialConfig::validate() const {
  if (!graph) throw std::invalid_argument("trial config has no graph");
  if (trials == 0) throw std::invalid_argument("trial count must be positive");
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("p must lie in (0, 1]");
  if (!oracle.is_exact() && !(oracle.eps > 0.0)) throw std::invalid_argument("perturbed oracle needs eps > 0");
  switch (algorithm) {
    case Algorithm::kBlur:
      if (alpha > 0.0) {
        BlurParams::with_alpha(rho, alpha);
      } else {
        BlurParams::for_graph(rho, graph->order());
      }
      for (Vertex v : seed_set) {
        if (!graph->contains(v)) throw std::invalid_argument("seed vertex " + std::to_string(v) + " not in graph");
      }
      break;
    case Algorithm::kDecompose:
      DecomposeParams::make(delta, c, graph->order());
      if (iteration_cap < 0) throw std::invalid_argument("negative iteration cap");
      break;
    default:
      if (!(c >= 1.0)) throw std::invalid_argument("c must be at least 1");
      if (graph->order() == 0) throw std::invalid_argument("empty graph");
      if (!graph->is_connected()) throw std::invalid_argument("hierarchy needs a connected graph");
      if (oracle.eps > 1.0) throw std::invalid_argument("oracle eps must be at most 1 for the diameter estimate");
      break;
  }
}

namespace {

class Fingerprint {
 public:
  void add(std::uint64_t x) { state_ = mix64(state_ ^ (x + 0x9e3779b97f4a7c15ULL + (state_ << 6))); }
  void add(double x) { add(std::bit_cast<std::uint64_t>(x)); }
  void add(const std::string& s) {
    for (char ch : s) add(static_cast<std::uint64_t>(static_cast<unsigned char>(ch)));
  }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 0x6c6f7764696d;
};

void add_tsd(Fingerprint& fp, const Tsd& tsd) {
  fp.add(static_cast<std::uint64_t>(tsd.iterations));
  for (const auto& c : tsd.clusters) {
    fp.add(static_cast<std::uint64_t>(c.members.size()));
    for (Vertex v : c.members) fp.add(static_cast<std::uint64_t>(v));
    fp.add(static_cast<std::uint64_t>(c.tree.root));
    for (const auto& e : c.tree.edges) fp.add(static_cast<std::uint64_t>(e.edge));
  }
}

void record_loads(TrialOutcome& out, const std::vector<int>& load) {
  std::map<int, std::uint32_t> counts;
  for (int l : load) ++counts[l];
  out.load_counts.assign(counts.begin(), counts.end());
  out.max_load = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

void finish_stretch(TrialOutcome& out, double p) {
  if (out.edge_stretch.empty()) return;
  double s = 0.0;
  double sp = 0.0;
  for (double x : out.edge_stretch) {
    s += x;
    sp += std::pow(x, p);
  }
  out.stretch = s / static_cast<double>(out.edge_stretch.size());
  out.p_stretch = sp / static_cast<double>(out.edge_stretch.size());
}

void run_hierarchy(const TrialConfig& cfg, const Graph& g, RandomStream& stream, CallLedger& ledger, TrialOutcome& out,
                   Fingerprint& fp) {
  const Htsd h = build_htsd(g, cfg.c, cfg.oracle, stream, ledger);
  out.violations = audit_htsd(g, h, cfg.exact_diameter);
  out.k = h.k;
  out.delta = h.delta;
  fp.add(h.delta);
  for (const auto& level : h.levels) {
    add_tsd(fp, level);
    out.iterations = std::max(out.iterations, level.iterations);
  }
  record_loads(out, h.load);
  out.diameter_event = htsd_diameters_hold(h);
  for (std::size_t i = 0; i < h.levels.size(); ++i) {
    const double budget = h.d[i];
    const double diam = max_tree_diameter(h.levels[i]);
    if (diam > 0.0) out.diameter_ratio = std::max(out.diameter_ratio, diam / budget);
  }
  out.cut.assign(h.edges.size(), 0);
  for (std::size_t e = 0; e < h.edges.size(); ++e) out.cut[e] = h.decoupling[e] == 0;

  const bool small = g.order() <= cfg.domination_cap;
  out.edge_stretch.assign(h.edges.size(), 0.0);
  switch (cfg.algorithm) {
    case Algorithm::kHtsd:
      for (std::size_t e = 0; e < h.edges.size(); ++e) out.edge_stretch[e] = htsd_stretch(h, static_cast<EdgeId>(e));
      break;
    case Algorithm::kProjected: {
      const ProjectedTree t = build_projected_tree(h);
      auto more = audit_projected_tree(g, h, t, false);
      out.violations.insert(out.violations.end(), more.begin(), more.end());
      std::vector<std::vector<std::size_t>> by_u(static_cast<std::size_t>(h.n));
      for (std::size_t e = 0; e < h.edges.size(); ++e) by_u[static_cast<std::size_t>(h.edges[e].u)].push_back(e);
      for (Vertex u = 0; u < h.n; ++u) {
        if (by_u[static_cast<std::size_t>(u)].empty()) continue;
        const auto dist = t.distances_from(t.embedding[static_cast<std::size_t>(u)]);
        for (std::size_t e : by_u[static_cast<std::size_t>(u)]) {
          const auto vnode = t.embedding[static_cast<std::size_t>(h.edges[e].v)];
          out.edge_stretch[e] = dist[static_cast<std::size_t>(vnode)] / h.edges[e].length;
        }
      }
      if (small) {
        const auto rep = verify_domination(t, g, cfg.domination_cap);
        out.domination_pairs = rep.pairs;
        out.domination_violations = rep.violations;
        if (rep.violations > 0) out.violations.push_back("projected: domination violated");
      }
      fp.add(static_cast<std::uint64_t>(t.node_count()));
      break;
    }
    case Algorithm::kHst: {
      const Hst t = build_hst(h);
      auto more = audit_hst(g, h, t, false);
      out.violations.insert(out.violations.end(), more.begin(), more.end());
      for (std::size_t e = 0; e < h.edges.size(); ++e) out.edge_stretch[e] = tree_stretch(t, h.edges[e]);
      if (small && out.diameter_event) {
        const auto rep = verify_domination(t, g, cfg.domination_cap);
        out.domination_pairs = rep.pairs;
        out.domination_violations = rep.violations;
        if (rep.violations > 0) out.violations.push_back("hst: domination violated despite all diameter bounds");
      }
      fp.add(static_cast<std::uint64_t>(t.nodes.size()));
      break;
    }
    default:
      break;
  }
  for (double x : out.edge_stretch) fp.add(x);
  finish_stretch(out, cfg.p);
}

}  // namespace

TrialOutcome run_single_trial(const TrialConfig& cfg, std::uint64_t index) {
  const Graph& g = *cfg.graph;
  TrialOutcome out;
  out.index = index;
  RandomStream stream(cfg.seed, index);
  CallLedger ledger(cfg.record_trace);
  Fingerprint fp;
  try {
    switch (cfg.algorithm) {
      case Algorithm::kBlur: {
        const BlurParams params =
            cfg.alpha > 0.0 ? BlurParams::with_alpha(cfg.rho, cfg.alpha) : BlurParams::for_graph(cfg.rho, g.order());
        const BlurResult r = blur(g, params, cfg.seed_set, cfg.oracle, stream, ledger);
        out.violations = audit_blur(g, params, cfg.seed_set, r);
        std::vector<char> in(static_cast<std::size_t>(g.universe()), 0);
        for (Vertex v : r.set) in[static_cast<std::size_t>(v)] = 1;
        out.cut.assign(g.size(), 0);
        for (std::size_t e = 0; e < g.size(); ++e) {
          const Edge& edge = g.edges()[e];
          out.cut[e] = in[static_cast<std::size_t>(edge.u)] != in[static_cast<std::size_t>(edge.v)];
        }
        out.iterations = static_cast<int>(r.trace.rounds.size());
        for (const auto& round : r.trace.rounds) fp.add(round.radius);
        for (Vertex v : r.set) fp.add(static_cast<std::uint64_t>(v));
        break;
      }
      case Algorithm::kDecompose: {
        DecomposeParams params = DecomposeParams::make(cfg.delta, cfg.c, g.order());
        params.iteration_cap = cfg.iteration_cap;
        const Tsd tsd = ts_decompose(g, params, cfg.oracle, stream, ledger);
        out.violations = audit_tsd(g, params, tsd);
        add_tsd(fp, tsd);
        out.iterations = tsd.iterations;
        std::vector<int> load(g.size(), 0);
        for (const auto& [e, l] : tsd.loads) load[static_cast<std::size_t>(e)] = l;
        record_loads(out, load);
        out.cut.assign(g.size(), 0);
        for (EdgeId e : tsd.cut_edges) out.cut[static_cast<std::size_t>(e)] = 1;
        const double diam = max_tree_diameter(tsd);
        out.diameter_ratio = diam / cfg.delta;
        out.diameter_event = diam <= cfg.delta;
        break;
      }
      default:
        run_hierarchy(cfg, g, stream, ledger, out, fp);
        break;
    }
  } catch (const IterationCapExceeded& e) {
    out.failure = e.what();
    fp.add(out.failure);
  }
  out.oracle_total = ledger.total();
  out.oracle_merged = ledger.merged();
  out.by_phase = ledger.by_phase();
  if (cfg.record_trace) out.recount_matches = recount_merged(ledger.trace()) == ledger.merged();
  fp.add(out.oracle_total);
  fp.add(out.oracle_merged);
  out.fingerprint = fp.value();
  return out;
}

TrialStats run_trials(const TrialConfig& input) {
  input.validate();
  TrialConfig cfg = input;
  const Graph& g = *cfg.graph;
  const bool hierarchy = cfg.algorithm != Algorithm::kBlur && cfg.algorithm != Algorithm::kDecompose;
  if (hierarchy && !cfg.exact_diameter && g.order() <= cfg.domination_cap) {
    const auto apsp = all_pairs_distances(g, cfg.domination_cap);
    cfg.exact_diameter = g.order() == 0 ? 0.0 : apsp.maxCoeff();
  }

  std::vector<TrialOutcome> outcomes(cfg.trials);
  std::vector<std::exception_ptr> errors(cfg.trials);
  unsigned width = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  width = static_cast<unsigned>(std::min<std::uint64_t>(width, cfg.trials));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < cfg.trials; i = next++) {
      try {
        outcomes[i] = run_single_trial(cfg, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  TrialStats stats;
  stats.trials = cfg.trials;
  std::vector<std::uint64_t> hits(g.size(), 0);
  std::vector<double> edge_sum(g.size(), 0.0);
  std::vector<double> trial_stretch;
  std::vector<double> trial_p;
  for (const auto& o : outcomes) {
    stats.oracle_total += o.oracle_total;
    stats.oracle_merged += o.oracle_merged;
    stats.max_merged = std::max(stats.max_merged, o.oracle_merged);
    stats.recount_mismatches += !o.recount_matches;
    for (const auto& [k, v] : o.by_phase) stats.by_phase[k] += v;
    if (!o.violations.empty()) {
      ++stats.audit_failures;
      std::set<std::string> kinds;
      for (const auto& v : o.violations) kinds.insert(v.substr(0, v.find(':')));
      for (const auto& kind : kinds) ++stats.violation_kinds[kind];
      stats.failures.push_back({o.index, cfg.seed, o.index, o.fingerprint, o.violations.front(), true});
    }
    if (!o.failure.empty()) {
      stats.failures.push_back({o.index, cfg.seed, o.index, o.fingerprint, o.failure, false});
      continue;
    }
    ++stats.completed;
    for (std::size_t e = 0; e < o.cut.size() && e < hits.size(); ++e) hits[e] += o.cut[e];
    ++stats.iteration_histogram[o.iterations];
    stats.iterations.push_back(o.iterations);
    for (const auto& [load, count] : o.load_counts) stats.load_histogram[load] += count;
    stats.max_load.push_back(o.max_load);
    stats.diameter_ratio.push_back(o.diameter_ratio);
    stats.diameter_violations += !o.diameter_event;
    stats.domination_pairs += o.domination_pairs;
    stats.domination_violations += o.domination_violations;
    if (!o.edge_stretch.empty()) {
      trial_stretch.push_back(o.stretch);
      trial_p.push_back(o.p_stretch);
      for (std::size_t e = 0; e < o.edge_stretch.size(); ++e) edge_sum[e] += o.edge_stretch[e];
    }
  }
  if (stats.completed > 0) {
    stats.cut_frequency.resize(g.size());
    for (std::size_t e = 0; e < g.size(); ++e) {
      const double f = static_cast<double>(hits[e]) / static_cast<double>(stats.completed);
      stats.cut_frequency[e] = {g.edge_ids()[e], hits[e], wilson_interval(f, stats.completed)};
    }
  }
  stats.stretch = estimate_mean(trial_stretch);
  stats.p_stretch = estimate_mean(trial_p);
  if (!trial_stretch.empty()) {
    stats.edge_stretch_mean.resize(g.size());
    for (std::size_t e = 0; e < g.size(); ++e) edge_sum[e] /= static_cast<double>(trial_stretch.size());
    stats.edge_stretch_mean = edge_sum;
  }
  if (cfg.abort_on_audit_failure && stats.audit_failures > 0) {
    for (const auto& f : stats.failures) {
      if (f.audit) {
        throw AuditFailure("audit failed in trial " + std::to_string(f.trial) + " (seed " + std::to_string(f.seed) +
                               ", key " + std::to_string(f.key) + "): " + f.what,
                           f);
      }
    }
  }
  return stats;
}

}  // namespace lowdiam
