#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace lowdiam {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Global id of the virtual super-source in SsspTree outputs.
inline constexpr Vertex kSuperSource = -1;
inline constexpr std::int32_t kNone = -1;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Endpoints are stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double length = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected weighted graph or a part of one.
//
// A part keeps the vertex ids and edge ids of the graph it was cut from.
// Vertices are stored in ascending id order, so the local index order agrees
// with the id order and "smallest id" tie-breaks can be done on local indices.
class Graph {
 public:
  struct Arc {
    std::int32_t to = 0;    // local index
    std::int32_t edge = 0;  // local edge index
    double length = 0.0;
  };

  Graph() = default;

  // Canonicalizes (u < v, sorted by (u, v)) and validates the edge list.
  // Edge ids of the result are positions in the canonical order.
  static Graph from_edges(Vertex n, std::vector<Edge> edges);

  Vertex universe() const noexcept { return universe_; }
  std::size_t order() const noexcept { return ids_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> vertices() const noexcept { return ids_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const EdgeId> edge_ids() const noexcept { return edge_ids_; }

  Vertex id(std::size_t local) const { return ids_[local]; }
  std::optional<std::size_t> local(Vertex v) const;
  bool contains(Vertex v) const { return local(v).has_value(); }

  std::span<const Arc> arcs(std::size_t local) const {
    return {arcs_.data() + offsets_[local], arcs_.data() + offsets_[local + 1]};
  }
  std::size_t degree(std::size_t local) const { return offsets_[local + 1] - offsets_[local]; }

  // Local endpoints of local edge `e`.
  std::size_t local_u(std::size_t e) const { return edge_local_[e].first; }
  std::size_t local_v(std::size_t e) const { return edge_local_[e].second; }

  // +inf on an edgeless graph.
  double min_edge_length() const noexcept;

  // Vertices in `keep` (ids of this graph) and the edges between them.
  Graph induced(std::span<const Vertex> keep) const;
  // Same vertex set, edges for which `keep_edge(local edge index)` holds.
  template <class Pred>
  Graph filter_edges(Pred keep_edge) const {
    std::vector<std::size_t> kept;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (keep_edge(e)) kept.push_back(e);
    }
    return subgraph(ids_, kept);
  }

  bool is_connected() const;

 private:
  // `vertex_ids` sorted; `kept_edges` local edge indices with both endpoints kept.
  Graph subgraph(std::span<const Vertex> vertex_ids, std::span<const std::size_t> kept_edges) const;
  void build_adjacency();

  Vertex universe_ = 0;
  std::vector<Vertex> ids_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> edge_ids_;
  std::vector<std::pair<std::int32_t, std::int32_t>> edge_local_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
};

// A graph part plus a virtual source s attached to some of its vertices.
// In node-indexed arrays s sits at local index `source()`, one past the base.
class SuperSourceGraph {
 public:
  SuperSourceGraph(Graph base, std::vector<double> source_lengths);

  const Graph& base() const noexcept { return base_; }
  std::size_t source() const noexcept { return base_.order(); }
  // Length of the edge (s, local); +inf when absent.
  double source_length(std::size_t local) const { return source_lengths_[local]; }
  std::span<const double> source_lengths() const noexcept { return source_lengths_; }
  std::size_t source_degree() const;

 private:
  Graph base_;
  std::vector<double> source_lengths_;
};

struct SourceEdge {
  Vertex vertex = 0;
  double length = 0.0;
};

SuperSourceGraph contract_into_super_source(const Graph& g, std::span<const Vertex> contracted);
SuperSourceGraph attach_super_source(const Graph& g, std::span<const SourceEdge> source_edges);

// Rooted shortest-path-style tree over the nodes of the graph it was computed
// on. Node arrays are local-indexed; for super-source graphs the last node is s.
struct SsspTree {
  std::vector<Vertex> ids;             // local -> global id (kSuperSource for s)
  std::size_t root = 0;                // local index
  std::vector<std::int32_t> parent;    // local index, kNone for root/unreached
  std::vector<EdgeId> parent_edge;     // global edge id, kNone for source edges
  std::vector<double> parent_length;   // length of the parent edge
  std::vector<double> dist;            // +inf when unreached
  std::vector<std::int32_t> order;     // reached nodes, parents before children

  std::size_t node_count() const noexcept { return ids.size(); }
  bool reached(std::size_t node) const { return dist[node] != kInfinity; }
  double distance_to(Vertex v) const;
};

SsspTree exact_sssp(const Graph& g, Vertex root);
// Rooted at the super-source.
SsspTree exact_sssp(const SuperSourceGraph& g);
// Rooted at a base vertex of a super-source graph.
SsspTree exact_sssp(const SuperSourceGraph& g, Vertex root);

namespace detail {
// Dijkstra over base arcs plus optional source arcs. Ties in tentative
// distance go to the smaller local parent index; s compares above all base
// vertices. Empty scale spans mean "unscaled".
SsspTree dijkstra(const Graph& base, bool with_source, std::span<const double> source_lengths, std::size_t root,
                  std::span<const double> edge_scale, std::span<const double> source_scale);
// Recomputes `dist` along the tree from `parent_length`.
void remeasure(SsspTree& tree);
}  // namespace detail

inline constexpr std::size_t kDefaultApspCap = 5000;

Eigen::MatrixXd all_pairs_distances(const Graph& g, std::size_t cap = kDefaultApspCap);

double weak_diameter(const Graph& g, std::span<const Vertex> subset);

// Edge-list text format: "p <n> <m>" then m lines "e <u> <v> <w>".
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

}  // namespace lowdiam
