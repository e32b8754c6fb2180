#include "lowdiam/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <tuple>

namespace lowdiam {

OracleConfig OracleConfig::perturbed(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("perturbed oracle needs eps > 0");
  return {OracleMode::kPerturbed, eps};
}

OracleConfig OracleConfig::with_eps(double e) const {
  if (is_exact()) return exact();
  return perturbed(e);
}

std::string to_string(OracleMode mode) { return mode == OracleMode::kExact ? "exact" : "perturbed"; }

OracleMode parse_oracle_mode(const std::string& name) {
  if (name == "exact") return OracleMode::kExact;
  if (name == "perturbed") return OracleMode::kPerturbed;
  throw std::invalid_argument("unknown oracle mode '" + name + "'");
}

std::string to_string(Phase phase) {
  switch (phase) {
    case Phase::kStandalone: return "standalone";
    case Phase::kDiameter: return "diameter";
    case Phase::kInitialCells: return "initial_cells";
    case Phase::kSeparation: return "separation";
    case Phase::kBlur: return "blur";
  }
  return "unknown";
}

void CallLedger::record(const CallTag& tag) {
  ++total_;
  std::string key = to_string(tag.phase);
  if (tag.phase == Phase::kBlur) key += "_round_" + std::to_string(tag.step - 1);
  ++by_phase_[key];
  std::uint64_t sequence = 0;
  if (!tag.batched) {
    ++merged_;
    sequence = ++standalone_;
  }
  if (record_trace_) trace_.push_back(TraceEvent{tag, sequence});
}

void CallLedger::absorb(const CallLedger& other) {
  total_ += other.total_;
  merged_ += other.merged_;
  for (const auto& [k, v] : other.by_phase_) by_phase_[k] += v;
  if (record_trace_) {
    for (TraceEvent e : other.trace_) {
      if (!e.tag.batched) e.sequence = ++standalone_;
      trace_.push_back(e);
    }
  } else {
    standalone_ += other.standalone_;
  }
}

std::uint64_t recount_merged(const std::vector<TraceEvent>& trace) {
  std::set<std::tuple<Phase, std::int32_t, std::int32_t, std::int32_t>> batches;
  std::uint64_t standalone = 0;
  for (const auto& e : trace) {
    if (!e.tag.batched) {
      ++standalone;
      continue;
    }
    // Blur round j of every cell in one iteration shares a batch.
    batches.emplace(e.tag.phase, e.tag.level, e.tag.iteration, e.tag.step);
  }
  return standalone + batches.size();
}

LedgerReport ledger_report(const CallLedger& ledger) {
  return {ledger.total(), ledger.merged(), ledger.by_phase()};
}

namespace {

SsspTree run_oracle(const Graph& base, bool with_source, std::span<const double> source_lengths, std::size_t root,
                    const OracleConfig& cfg, RandomStream& stream) {
  if (cfg.is_exact() || cfg.eps == 0.0) {
    return detail::dijkstra(base, with_source, source_lengths, root, {}, {});
  }
  std::vector<double> edge_scale(base.size());
  for (double& f : edge_scale) f = 1.0 + cfg.eps * stream.next_unit();
  std::vector<double> source_scale;
  if (with_source) {
    source_scale.resize(base.order());
    for (double& f : source_scale) f = 1.0 + cfg.eps * stream.next_unit();
  }
  SsspTree t = detail::dijkstra(base, with_source, source_lengths, root, edge_scale, source_scale);
  detail::remeasure(t);
  return t;
}

}  // namespace

SsspTree approx_sssp(const Graph& g, Vertex root, const OracleConfig& cfg, RandomStream& stream, CallLedger& ledger,
                     const CallTag& tag) {
  auto l = g.local(root);
  if (!l) throw GraphError("root " + std::to_string(root) + " not in graph");
  ledger.record(tag);
  return run_oracle(g, false, {}, *l, cfg, stream);
}

SsspTree approx_sssp(const SuperSourceGraph& g, const OracleConfig& cfg, RandomStream& stream, CallLedger& ledger,
                     const CallTag& tag) {
  ledger.record(tag);
  return run_oracle(g.base(), true, g.source_lengths(), g.source(), cfg, stream);
}

DiameterEstimate approximate_diameter(const Graph& g, const OracleConfig& cfg, RandomStream& stream,
                                      CallLedger& ledger) {
  if (g.order() == 0) throw GraphError("diameter of an empty graph");
  if (!g.is_connected()) throw GraphError("diameter estimate needs a connected graph");
  if (cfg.eps > 1.0) throw std::invalid_argument("diameter estimate needs an oracle error of at most 1");
  DiameterEstimate est;
  est.source = g.id(0);
  CallTag tag;
  tag.phase = Phase::kDiameter;
  est.tree = approx_sssp(g, est.source, cfg, stream, ledger, tag);
  double far = 0.0;
  for (double d : est.tree.dist) far = std::max(far, d);
  est.delta = far / 2.0;
  return est;
}

}  // namespace lowdiam
