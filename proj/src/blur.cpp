#include "lowdiam/blur.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lowdiam {

double log2_at_least_one(std::size_t n) {
  return std::max(1.0, std::log2(static_cast<double>(std::max<std::size_t>(n, 1))));
}

BlurParams BlurParams::for_graph(double rho, std::size_t n) {
  return with_alpha(rho, 1.0 / (2.0 * log2_at_least_one(n)));
}

BlurParams BlurParams::with_alpha(double rho, double alpha) {
  BlurParams p;
  p.rho = rho;
  p.alpha = alpha;
  p.eps = alpha * alpha;
  p.validate();
  return p;
}

void BlurParams::validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("blur: rho must be positive");
  if (!(alpha > 0.0) || alpha > 0.5) throw std::invalid_argument("blur: alpha must lie in (0, 1/2]");
  if (eps < 0.0 || eps > alpha * alpha) throw std::invalid_argument("blur: SSSP error must satisfy eps <= alpha^2");
}

std::vector<Vertex> BlurTrace::set_after(std::size_t i) const {
  std::vector<Vertex> out = initial;
  for (std::size_t j = 0; j < i && j < rounds.size(); ++j) {
    out.insert(out.end(), rounds[j].absorbed.begin(), rounds[j].absorbed.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int blur_round_count(const BlurParams& params, double min_edge_length) {
  int rounds = 0;
  for (double bound = params.rho; bound >= min_edge_length; bound *= params.alpha) ++rounds;
  return rounds;
}

BlurResult blur(const Graph& g, const BlurParams& params, std::span<const Vertex> seed_set, const OracleConfig& cfg,
                RandomStream& stream, CallLedger& ledger, CallTag tag) {
  params.validate();
  BlurResult out;
  std::vector<char> in_set(g.order(), 0);
  for (Vertex v : seed_set) {
    auto l = g.local(v);
    if (!l) throw GraphError("blur: vertex " + std::to_string(v) + " not in graph");
    in_set[*l] = 1;
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (in_set[i]) out.trace.initial.push_back(g.id(i));
  }
  std::size_t size = out.trace.initial.size();
  if (size == 0) return out;

  const OracleConfig round_cfg = cfg.with_eps(params.eps);
  const double min_len = g.min_edge_length();
  tag.phase = Phase::kBlur;
  int round = 0;
  for (double bound = params.rho; bound >= min_len; bound *= params.alpha) {
    ++round;
    RandomStream round_stream = stream.derive(static_cast<std::uint64_t>(round));
    BlurRound rec;
    rec.index = round;
    rec.radius_cap = bound;
    rec.radius = sample_uniform(round_stream, bound);

    std::vector<Vertex> current;
    current.reserve(size);
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (in_set[i]) current.push_back(g.id(i));
    }
    const SuperSourceGraph contracted = contract_into_super_source(g, current);
    tag.step = 1 + round;
    const SsspTree t = approx_sssp(contracted, round_cfg, round_stream, ledger, tag);
    for (std::size_t j = 0; j < contracted.base().order(); ++j) {
      if (t.dist[j] <= rec.radius) rec.absorbed.push_back(contracted.base().id(j));
    }
    for (Vertex v : rec.absorbed) in_set[*g.local(v)] = 1;
    size += rec.absorbed.size();
    rec.size = size;
    out.trace.rounds.push_back(std::move(rec));
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (in_set[i]) out.set.push_back(g.id(i));
  }
  return out;
}

double distance_from_set(const Graph& g, std::span<const Vertex> seed_set, std::span<const Vertex> set) {
  if (seed_set.empty()) return set.empty() ? 0.0 : kInfinity;
  const SuperSourceGraph contracted = contract_into_super_source(g, seed_set);
  const SsspTree t = exact_sssp(contracted);
  std::vector<char> in_seed(g.order(), 0);
  for (Vertex v : seed_set) in_seed[*g.local(v)] = 1;
  double worst = 0.0;
  for (Vertex v : set) {
    auto l = g.local(v);
    if (!l) throw GraphError("distance_from_set: vertex " + std::to_string(v) + " not in graph");
    if (in_seed[*l]) continue;
    worst = std::max(worst, t.distance_to(v));
  }
  return worst;
}

}  // namespace lowdiam
