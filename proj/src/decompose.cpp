#include "lowdiam/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lowdiam {

DecomposeParams DecomposeParams::make(double delta, double c, std::size_t n) {
  DecomposeParams p;
  p.delta = delta;
  p.c = c;
  p.n = n;
  p.validate();
  return p;
}

void DecomposeParams::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("ts_decompose: delta must be positive");
  if (!(c >= 1.0) || !std::isfinite(c)) throw std::invalid_argument("ts_decompose: c must be at least 1");
  if (iteration_cap < 0) throw std::invalid_argument("ts_decompose: negative iteration cap");
}

int DecomposeParams::max_iterations() const {
  if (iteration_cap > 0) return iteration_cap;
  return static_cast<int>(std::ceil(64.0 * c * log_n()));
}

namespace {

struct TreeWalk {
  std::vector<Vertex> ids;
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;
};

TreeWalk adjacency_of(const SupportingTree& t) {
  TreeWalk w;
  w.ids = t.vertices;
  w.adj.resize(w.ids.size());
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(w.ids.begin(), w.ids.end(), v) - w.ids.begin());
  };
  for (const auto& e : t.edges) {
    const std::size_t a = index(e.parent);
    const std::size_t b = index(e.child);
    w.adj[a].emplace_back(b, e.length);
    w.adj[b].emplace_back(a, e.length);
  }
  return w;
}

// Farthest vertex and its distance from `from`.
std::pair<std::size_t, double> farthest(const TreeWalk& w, std::size_t from) {
  std::vector<double> dist(w.ids.size(), -1.0);
  std::vector<std::size_t> stack{from};
  dist[from] = 0.0;
  std::pair<std::size_t, double> best{from, 0.0};
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    if (dist[x] > best.second) best = {x, dist[x]};
    for (const auto& [y, len] : w.adj[x]) {
      if (dist[y] < 0.0) {
        dist[y] = dist[x] + len;
        stack.push_back(y);
      }
    }
  }
  return best;
}

}  // namespace

double SupportingTree::depth() const {
  if (vertices.size() <= 1) return 0.0;
  const TreeWalk w = adjacency_of(*this);
  const auto r = static_cast<std::size_t>(std::lower_bound(w.ids.begin(), w.ids.end(), root) - w.ids.begin());
  return farthest(w, r).second;
}

double SupportingTree::diameter() const {
  if (vertices.size() <= 1) return 0.0;
  const TreeWalk w = adjacency_of(*this);
  const auto a = farthest(w, 0).first;
  return farthest(w, a).second;
}

std::vector<std::int32_t> Tsd::assignment(Vertex universe) const {
  std::vector<std::int32_t> out(static_cast<std::size_t>(universe), kNone);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (Vertex v : clusters[i].members) out[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(i);
  }
  return out;
}

std::uint64_t Tsd::merged_calls() const {
  return std::accumulate(schedule.begin(), schedule.end(), std::uint64_t{0});
}

namespace detail {

std::vector<EdgeId> cut_edges_of(const Graph& g, const std::vector<std::int32_t>& assignment) {
  std::vector<EdgeId> cut;
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edges()[e];
    if (assignment[static_cast<std::size_t>(edge.u)] != assignment[static_cast<std::size_t>(edge.v)]) {
      cut.push_back(g.edge_ids()[e]);
    }
  }
  std::sort(cut.begin(), cut.end());
  return cut;
}

Tsd decompose_batched(const Graph& g, const DecomposeParams& params, const OracleConfig& cfg, RandomStream& stream,
                      CallLedger& ledger, std::int32_t level) {
  params.validate();
  Tsd out;
  const double beta = params.beta();
  const double threshold = params.long_edge_threshold();
  const double margin = params.interior_margin();
  const BlurParams blur_params = params.blur_params();
  const OracleConfig sssp_cfg = cfg.with_eps(params.eps());
  const int cap = params.max_iterations();

  Graph remaining = g.filter_edges([&](std::size_t e) {
    if (g.edges()[e].length > threshold) {
      out.deleted_edges.push_back(g.edge_ids()[e]);
      return false;
    }
    return true;
  });
  std::sort(out.deleted_edges.begin(), out.deleted_edges.end());

  auto emit_isolated = [&](int iteration) {
    std::vector<Vertex> keep;
    keep.reserve(remaining.order());
    for (std::size_t i = 0; i < remaining.order(); ++i) {
      const Vertex v = remaining.id(i);
      if (remaining.degree(i) > 0) {
        keep.push_back(v);
        continue;
      }
      Cluster c;
      c.members = {v};
      c.tree.root = v;
      c.tree.vertices = {v};
      c.iteration = iteration;
      out.clusters.push_back(std::move(c));
    }
    if (keep.size() != remaining.order()) remaining = remaining.induced(keep);
  };

  emit_isolated(0);
  int iteration = 0;
  while (remaining.size() > 0) {
    ++iteration;
    if (iteration > cap) throw IterationCapExceeded(cap);
    const RandomStream iter_stream = stream.derive(static_cast<std::uint64_t>(iteration));
    const std::size_t n = remaining.order();

    // Exponential shifts, keyed per vertex.
    const RandomStream shift_stream = iter_stream.derive(0);
    std::vector<double> shift(n);
    for (std::size_t i = 0; i < n; ++i) {
      RandomStream vs = shift_stream.derive(static_cast<std::uint64_t>(remaining.id(i)));
      shift[i] = sample_exponential(vs, beta);
    }
    const double max_shift = *std::max_element(shift.begin(), shift.end());
    std::vector<double> source_len(n);
    for (std::size_t i = 0; i < n; ++i) source_len[i] = 1.0 + max_shift - shift[i];

    CallTag tag{Phase::kInitialCells, level, iteration, 0, true};
    RandomStream cells_stream = iter_stream.derive(1);
    const SuperSourceGraph shifted(remaining, std::move(source_len));
    const SsspTree tree = approx_sssp(shifted, sssp_cfg, cells_stream, ledger, tag);

    const auto s = static_cast<std::int32_t>(n);
    std::vector<std::int32_t> cell(n, kNone);
    std::vector<std::size_t> roots;
    for (std::int32_t xi : tree.order) {
      const auto x = static_cast<std::size_t>(xi);
      if (xi == s) continue;
      if (tree.parent[x] == s) {
        cell[x] = xi;
        roots.push_back(x);
      } else {
        cell[x] = cell[static_cast<std::size_t>(tree.parent[x])];
      }
    }
    std::sort(roots.begin(), roots.end());

    std::vector<double> boundary_len(n, kInfinity);
    for (std::size_t x = 0; x < n; ++x) {
      for (const auto& a : remaining.arcs(x)) {
        if (cell[static_cast<std::size_t>(a.to)] != cell[x]) {
          boundary_len[x] = 1.0;
          break;
        }
      }
    }
    tag = CallTag{Phase::kSeparation, level, iteration, 1, true};
    RandomStream sep_stream = iter_stream.derive(2);
    const SuperSourceGraph separated(remaining, std::move(boundary_len));
    const SsspTree sep_tree = approx_sssp(separated, sssp_cfg, sep_stream, ledger, tag);

    std::vector<std::vector<Vertex>> cell_members(n);
    std::vector<std::vector<Vertex>> interior(n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto r = static_cast<std::size_t>(cell[x]);
      cell_members[r].push_back(remaining.id(x));
      if (!(sep_tree.dist[x] <= margin)) interior[r].push_back(remaining.id(x));
    }

    const RandomStream blur_stream = iter_stream.derive(3);
    std::vector<char> clustered(n, 0);
    int max_rounds = 0;
    for (std::size_t r : roots) {
      if (interior[r].empty()) continue;
      const Graph cell_graph = remaining.induced(cell_members[r]);
      RandomStream cs = blur_stream.derive(static_cast<std::uint64_t>(remaining.id(r)));
      BlurResult blurred =
          blur(cell_graph, blur_params, interior[r], cfg, cs, ledger, CallTag{Phase::kBlur, level, iteration, 0, true});
      max_rounds = std::max(max_rounds, static_cast<int>(blurred.trace.rounds.size()));

      Cluster c;
      c.members = std::move(blurred.set);
      c.core = std::move(interior[r]);
      c.iteration = iteration;
      c.tree.root = remaining.id(r);
      c.tree.vertices = cell_members[r];
      for (std::int32_t xi : tree.order) {
        const auto x = static_cast<std::size_t>(xi);
        if (xi == s || x == r || cell[x] != static_cast<std::int32_t>(r)) continue;
        const auto p = static_cast<std::size_t>(tree.parent[x]);
        c.tree.edges.push_back(TreeEdge{remaining.id(p), remaining.id(x), tree.parent_edge[x], tree.parent_length[x]});
      }
      for (const auto& e : c.tree.edges) ++out.loads[e.edge];
      for (Vertex v : c.members) clustered[*remaining.local(v)] = 1;
      out.clusters.push_back(std::move(c));
    }
    out.schedule.push_back(2 + max_rounds);

    std::vector<Vertex> keep;
    keep.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (!clustered[x]) keep.push_back(remaining.id(x));
    }
    if (keep.size() != n) remaining = remaining.induced(keep);
    emit_isolated(iteration);
  }
  out.iterations = iteration;
  out.cut_edges = cut_edges_of(g, out.assignment(g.universe()));
  return out;
}

}  // namespace detail

Tsd ts_decompose(const Graph& g, const DecomposeParams& params, const OracleConfig& cfg, RandomStream& stream,
                 CallLedger& ledger) {
  Tsd out = detail::decompose_batched(g, params, cfg, stream, ledger, 0);
  ledger.add_merged(out.merged_calls());
  return out;
}

}  // namespace lowdiam
