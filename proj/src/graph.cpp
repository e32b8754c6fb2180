#include "lowdiam/graph.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace lowdiam {

Graph Graph::from_edges(Vertex n, std::vector<Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (!(e.length > 0.0) || e.length == kInfinity) {
      throw GraphError("edge length must be positive and finite");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw GraphError("duplicate edge " + std::to_string(edges[i].u) + " " + std::to_string(edges[i].v));
    }
  }

  Graph g;
  g.universe_ = n;
  g.ids_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) g.ids_[static_cast<std::size_t>(v)] = v;
  g.edge_ids_.resize(edges.size());
  g.edge_local_.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    g.edge_ids_[i] = static_cast<EdgeId>(i);
    g.edge_local_[i] = {edges[i].u, edges[i].v};
  }
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return g;
}

std::optional<std::size_t> Graph::local(Vertex v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

double Graph::min_edge_length() const noexcept {
  double best = kInfinity;
  for (const auto& e : edges_) best = std::min(best, e.length);
  return best;
}

void Graph::build_adjacency() {
  offsets_.assign(ids_.size() + 1, 0);
  for (const auto& [a, b] : edge_local_) {
    ++offsets_[static_cast<std::size_t>(a) + 1];
    ++offsets_[static_cast<std::size_t>(b) + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  arcs_.assign(offsets_.back(), Arc{});
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edge_local_.size(); ++e) {
    const auto [a, b] = edge_local_[e];
    const double len = edges_[e].length;
    arcs_[fill[static_cast<std::size_t>(a)]++] = Arc{b, static_cast<std::int32_t>(e), len};
    arcs_[fill[static_cast<std::size_t>(b)]++] = Arc{a, static_cast<std::int32_t>(e), len};
  }
}

Graph Graph::subgraph(std::span<const Vertex> vertex_ids, std::span<const std::size_t> kept_edges) const {
  Graph g;
  g.universe_ = universe_;
  g.ids_.assign(vertex_ids.begin(), vertex_ids.end());
  g.edges_.reserve(kept_edges.size());
  g.edge_ids_.reserve(kept_edges.size());
  g.edge_local_.reserve(kept_edges.size());
  for (std::size_t e : kept_edges) {
    const Edge& edge = edges_[e];
    g.edges_.push_back(edge);
    g.edge_ids_.push_back(edge_ids_[e]);
    g.edge_local_.emplace_back(static_cast<std::int32_t>(*g.local(edge.u)),
                               static_cast<std::int32_t>(*g.local(edge.v)));
  }
  g.build_adjacency();
  return g;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<char> in(ids_.size(), 0);
  for (Vertex v : sorted) {
    auto l = local(v);
    if (!l) throw GraphError("induced: vertex " + std::to_string(v) + " not in graph");
    in[*l] = 1;
  }
  std::vector<std::size_t> kept;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (in[static_cast<std::size_t>(edge_local_[e].first)] && in[static_cast<std::size_t>(edge_local_[e].second)]) {
      kept.push_back(e);
    }
  }
  return subgraph(sorted, kept);
}

bool Graph::is_connected() const {
  if (ids_.empty()) return true;
  std::vector<char> seen(ids_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const Arc& a : arcs(x)) {
      const auto y = static_cast<std::size_t>(a.to);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == ids_.size();
}

SuperSourceGraph::SuperSourceGraph(Graph base, std::vector<double> source_lengths)
    : base_(std::move(base)), source_lengths_(std::move(source_lengths)) {
  if (source_lengths_.size() != base_.order()) {
    throw GraphError("super-source length vector does not match base graph");
  }
  for (double len : source_lengths_) {
    if (!(len > 0.0)) throw GraphError("super-source edge length must be positive");
  }
}

std::size_t SuperSourceGraph::source_degree() const {
  return static_cast<std::size_t>(
      std::count_if(source_lengths_.begin(), source_lengths_.end(), [](double x) { return x != kInfinity; }));
}

SuperSourceGraph contract_into_super_source(const Graph& g, std::span<const Vertex> contracted) {
  if (contracted.empty()) throw GraphError("cannot contract an empty vertex set");
  std::vector<char> in_b(g.order(), 0);
  for (Vertex v : contracted) {
    auto l = g.local(v);
    if (!l) throw GraphError("contract: vertex " + std::to_string(v) + " not in graph");
    in_b[*l] = 1;
  }
  std::vector<Vertex> rest;
  rest.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!in_b[i]) rest.push_back(g.id(i));
  }
  Graph base = g.induced(rest);
  std::vector<double> lengths(base.order(), kInfinity);
  for (std::size_t i = 0, j = 0; i < g.order(); ++i) {
    if (in_b[i]) continue;
    double best = kInfinity;
    for (const auto& a : g.arcs(i)) {
      if (in_b[static_cast<std::size_t>(a.to)]) best = std::min(best, a.length);
    }
    lengths[j++] = best;
  }
  return SuperSourceGraph(std::move(base), std::move(lengths));
}

SuperSourceGraph attach_super_source(const Graph& g, std::span<const SourceEdge> source_edges) {
  std::vector<double> lengths(g.order(), kInfinity);
  for (const auto& se : source_edges) {
    if (!(se.length > 0.0)) throw GraphError("super-source edge length must be positive");
    auto l = g.local(se.vertex);
    if (!l) throw GraphError("attach: vertex " + std::to_string(se.vertex) + " not in graph");
    lengths[*l] = se.length;
  }
  return SuperSourceGraph(g, std::move(lengths));
}

double SsspTree::distance_to(Vertex v) const {
  const bool has_source = !ids.empty() && ids.back() == kSuperSource;
  if (v == kSuperSource) return has_source ? dist.back() : kInfinity;
  const auto base_end = ids.end() - (has_source ? 1 : 0);
  auto it = std::lower_bound(ids.begin(), base_end, v);
  if (it == base_end || *it != v) throw GraphError("vertex " + std::to_string(v) + " not in tree");
  return dist[static_cast<std::size_t>(it - ids.begin())];
}

namespace detail {

SsspTree dijkstra(const Graph& base, bool with_source, std::span<const double> source_lengths, std::size_t root,
                  std::span<const double> edge_scale, std::span<const double> source_scale) {
  const bool has_source = with_source;
  const std::size_t n = base.order();
  const std::size_t nodes = n + (has_source ? 1 : 0);
  const std::size_t s = n;

  SsspTree t;
  t.ids.assign(base.vertices().begin(), base.vertices().end());
  if (has_source) t.ids.push_back(kSuperSource);
  t.root = root;
  t.parent.assign(nodes, kNone);
  t.parent_edge.assign(nodes, kNone);
  t.parent_length.assign(nodes, 0.0);
  t.dist.assign(nodes, kInfinity);
  t.order.reserve(nodes);

  // Search-distance may be scaled; `dist` is returned in search lengths and
  // re-measured by the caller when scales are in use.
  std::vector<char> done(nodes, 0);
  using Item = std::pair<double, std::int32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  t.dist[root] = 0.0;
  heap.emplace(0.0, static_cast<std::int32_t>(root));

  auto relax = [&](std::size_t from, std::size_t to, double search_len, double true_len, EdgeId edge) {
    if (done[to]) return;
    const double nd = t.dist[from] + search_len;
    // s has the largest local index, which makes it compare above every vertex.
    if (nd < t.dist[to] || (nd == t.dist[to] && static_cast<std::int32_t>(from) < t.parent[to])) {
      const bool improved = nd < t.dist[to];
      t.dist[to] = nd;
      t.parent[to] = static_cast<std::int32_t>(from);
      t.parent_edge[to] = edge;
      t.parent_length[to] = true_len;
      if (improved) heap.emplace(nd, static_cast<std::int32_t>(to));
    }
  };

  while (!heap.empty()) {
    const auto [d, xi] = heap.top();
    heap.pop();
    const auto x = static_cast<std::size_t>(xi);
    if (done[x] || d > t.dist[x]) continue;
    done[x] = 1;
    t.order.push_back(xi);
    if (has_source && x == s) {
      for (std::size_t v = 0; v < n; ++v) {
        const double len = source_lengths[v];
        if (len == kInfinity) continue;
        const double search = source_scale.empty() ? len : len * source_scale[v];
        relax(x, v, search, len, kNone);
      }
      continue;
    }
    for (const auto& a : base.arcs(x)) {
      const double search = edge_scale.empty() ? a.length : a.length * edge_scale[static_cast<std::size_t>(a.edge)];
      relax(x, static_cast<std::size_t>(a.to), search, a.length, base.edge_ids()[static_cast<std::size_t>(a.edge)]);
    }
    if (has_source) {
      const double len = source_lengths[x];
      if (len != kInfinity) {
        const double search = source_scale.empty() ? len : len * source_scale[x];
        relax(x, s, search, len, kNone);
      }
    }
  }
  return t;
}

void remeasure(SsspTree& tree) {
  for (std::int32_t xi : tree.order) {
    const auto x = static_cast<std::size_t>(xi);
    if (x == tree.root) {
      tree.dist[x] = 0.0;
      continue;
    }
    tree.dist[x] = tree.dist[static_cast<std::size_t>(tree.parent[x])] + tree.parent_length[x];
  }
}

}  // namespace detail

SsspTree exact_sssp(const Graph& g, Vertex root) {
  auto l = g.local(root);
  if (!l) throw GraphError("root " + std::to_string(root) + " not in graph");
  return detail::dijkstra(g, false, {}, *l, {}, {});
}

SsspTree exact_sssp(const SuperSourceGraph& g) {
  return detail::dijkstra(g.base(), true, g.source_lengths(), g.source(), {}, {});
}

SsspTree exact_sssp(const SuperSourceGraph& g, Vertex root) {
  if (root == kSuperSource) return exact_sssp(g);
  auto l = g.base().local(root);
  if (!l) throw GraphError("root " + std::to_string(root) + " not in graph");
  return detail::dijkstra(g.base(), true, g.source_lengths(), *l, {}, {});
}

Eigen::MatrixXd all_pairs_distances(const Graph& g, std::size_t cap) {
  if (g.order() > cap) {
    throw GraphError("all_pairs_distances: " + std::to_string(g.order()) + " vertices exceeds cap " +
                     std::to_string(cap));
  }
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const SsspTree t = detail::dijkstra(g, false, {}, static_cast<std::size_t>(i), {}, {});
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = t.dist[static_cast<std::size_t>(j)];
  }
  return d;
}

double weak_diameter(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw GraphError("weak_diameter of an empty set");
  std::vector<std::size_t> locals;
  locals.reserve(subset.size());
  for (Vertex v : subset) {
    auto l = g.local(v);
    if (!l) throw GraphError("weak_diameter: vertex " + std::to_string(v) + " not in graph");
    locals.push_back(*l);
  }
  double best = 0.0;
  for (std::size_t a : locals) {
    const SsspTree t = detail::dijkstra(g, false, {}, a, {}, {});
    for (std::size_t b : locals) best = std::max(best, t.dist[b]);
  }
  return best;
}

}  // namespace lowdiam
