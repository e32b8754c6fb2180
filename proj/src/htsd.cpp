#include "lowdiam/htsd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lowdiam {

namespace {

Cluster whole_graph_cluster(const Graph& g, const SsspTree& t) {
  Cluster c;
  c.members.assign(g.vertices().begin(), g.vertices().end());
  c.tree.root = t.ids[static_cast<std::size_t>(t.root)];
  c.tree.vertices = c.members;
  for (std::int32_t xi : t.order) {
    const auto x = static_cast<std::size_t>(xi);
    if (t.parent[x] == kNone) continue;
    c.tree.edges.push_back(
        TreeEdge{t.ids[static_cast<std::size_t>(t.parent[x])], t.ids[x], t.parent_edge[x], t.parent_length[x]});
  }
  return c;
}

Cluster singleton(Vertex v, int iteration) {
  Cluster c;
  c.members = {v};
  c.tree.root = v;
  c.tree.vertices = {v};
  c.iteration = iteration;
  return c;
}

}  // namespace

Htsd build_htsd(const Graph& g, double c, const OracleConfig& cfg, RandomStream& stream, CallLedger& ledger) {
  if (g.order() == 0) throw GraphError("build_htsd: empty graph");
  if (!(c >= 1.0) || !std::isfinite(c)) throw std::invalid_argument("build_htsd: c must be at least 1");
  if (!g.is_connected()) throw GraphError("build_htsd: graph is disconnected");
  if (g.order() != static_cast<std::size_t>(g.universe())) throw GraphError("build_htsd: expects a whole graph");

  Htsd h;
  h.n = g.universe();
  h.edges.assign(g.edges().begin(), g.edges().end());
  h.c = c;
  const std::size_t n = g.order();

  Tsd top;
  if (n == 1) {
    h.delta = 0.0;
    h.d = {0.0};
    top.clusters.push_back(singleton(g.id(0), 0));
  } else {
    RandomStream ds = stream.derive(0);
    const DiameterEstimate est = approximate_diameter(g, cfg, ds, ledger);
    h.delta = est.delta;
    for (double di = 4.0 * h.delta;; di /= 2.0) {
      h.d.push_back(di);
      if (di < 1.0) break;
    }
    top.clusters.push_back(whole_graph_cluster(g, est.tree));
    for (const auto& e : top.clusters[0].tree.edges) ++top.loads[e.edge];
  }
  h.k = static_cast<int>(h.d.size()) - 1;
  h.levels.push_back(std::move(top));
  h.parent_cluster.push_back(std::vector<std::int32_t>(1, kNone));
  h.level_schedules.emplace_back();

  for (int i = 0; i < h.k; ++i) {
    const DecomposeParams params = DecomposeParams::make(h.d[static_cast<std::size_t>(i) + 1], c, n);
    const RandomStream level_stream = stream.derive(static_cast<std::uint64_t>(i) + 1);
    const Tsd& parent = h.levels.back();
    Tsd next;
    std::vector<std::int32_t> parents;
    std::vector<int> schedule;
    for (std::size_t ci = 0; ci < parent.clusters.size(); ++ci) {
      const auto& members = parent.clusters[ci].members;
      if (members.size() == 1) {
        next.clusters.push_back(singleton(members[0], 0));
        parents.push_back(static_cast<std::int32_t>(ci));
        continue;
      }
      const Graph sub = g.induced(members);
      RandomStream cs = level_stream.derive(ci);
      Tsd part = detail::decompose_batched(sub, params, cfg, cs, ledger, i + 1);
      if (part.schedule.size() > schedule.size()) schedule.resize(part.schedule.size(), 0);
      for (std::size_t t = 0; t < part.schedule.size(); ++t) schedule[t] = std::max(schedule[t], part.schedule[t]);
      for (auto& cl : part.clusters) {
        next.clusters.push_back(std::move(cl));
        parents.push_back(static_cast<std::int32_t>(ci));
      }
      next.deleted_edges.insert(next.deleted_edges.end(), part.deleted_edges.begin(), part.deleted_edges.end());
      for (const auto& [e, l] : part.loads) next.loads[e] += l;
      next.iterations = std::max(next.iterations, part.iterations);
    }
    std::sort(next.deleted_edges.begin(), next.deleted_edges.end());
    next.schedule = schedule;
    next.cut_edges = detail::cut_edges_of(g, next.assignment(g.universe()));
    h.levels.push_back(std::move(next));
    h.parent_cluster.push_back(std::move(parents));
    h.level_schedules.push_back(std::move(schedule));
  }

  std::uint64_t merged = 0;
  for (const auto& s : h.level_schedules) {
    for (int x : s) merged += static_cast<std::uint64_t>(x);
  }
  ledger.add_merged(merged);

  for (const auto& level : h.levels) h.cluster_of.push_back(level.assignment(g.universe()));

  h.decoupling.assign(h.edges.size(), kNone);
  h.load.assign(h.edges.size(), 0);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const auto u = static_cast<std::size_t>(h.edges[e].u);
    const auto v = static_cast<std::size_t>(h.edges[e].v);
    for (int i = 0; i < h.k; ++i) {
      if (h.cluster_of[static_cast<std::size_t>(i) + 1][u] != h.cluster_of[static_cast<std::size_t>(i) + 1][v]) {
        h.decoupling[e] = i;
        break;
      }
    }
  }
  for (const auto& level : h.levels) {
    for (const auto& [e, l] : level.loads) h.load[static_cast<std::size_t>(e)] += l;
  }
  return h;
}

int decoupling_level(const Htsd& h, EdgeId e) {
  if (e < 0 || static_cast<std::size_t>(e) >= h.decoupling.size()) {
    throw std::out_of_range("decoupling_level: edge " + std::to_string(e) + " out of range");
  }
  return h.decoupling[static_cast<std::size_t>(e)];
}

double htsd_stretch(const Htsd& h, EdgeId e) {
  const int i = decoupling_level(h, e);
  if (i == kNone) throw std::logic_error("htsd_stretch: edge never decoupled");
  return h.d[static_cast<std::size_t>(i)] / h.edges[static_cast<std::size_t>(e)].length;
}

double htsd_p_stretch(const Htsd& h, EdgeId e, double p) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("p must lie in (0, 1]");
  return std::pow(htsd_stretch(h, e), p);
}

std::uint64_t htsd_merged_calls(const Htsd& h) {
  std::uint64_t merged = h.k > 0 || h.delta > 0.0 ? 1 : 0;
  for (const auto& s : h.level_schedules) {
    for (int x : s) merged += static_cast<std::uint64_t>(x);
  }
  return merged;
}

}  // namespace lowdiam
