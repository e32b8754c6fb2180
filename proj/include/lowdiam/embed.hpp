#pragma once

#include <cstdint>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/htsd.hpp"

namespace lowdiam {

// Tree whose nodes are copies of graph vertices. `projection` maps a node to
// the vertex it copies, `embedding` maps each vertex to its designated node.
struct ProjectedTree {
  struct Link {
    std::int32_t a = 0;
    std::int32_t b = 0;
    EdgeId edge = kNone;  // the graph edge this link copies
    double length = 0.0;
  };

  std::vector<Vertex> projection;
  std::vector<std::int32_t> embedding;
  std::vector<Link> links;
  std::vector<int> load;  // links copying each edge id

  std::size_t node_count() const noexcept { return projection.size(); }
  bool is_tree() const;
  // Distances from `node` to every node.
  std::vector<double> distances_from(std::int32_t node) const;
  double distance(Vertex u, Vertex v) const;
};

// Hierarchically well-separated tree: one node per (level, cluster); the edge
// from a level-i node to a child on level i + 1 has length d_i.
struct Hst {
  struct Node {
    int level = 0;
    std::int32_t cluster = 0;
    Vertex leader = 0;  // smallest member id
    std::int32_t parent = kNone;
    double parent_length = 0.0;
  };

  int k = 0;
  std::vector<Node> nodes;            // root first, then level by level
  std::vector<std::int32_t> leaf_of;  // vertex -> level-k node

  double node_distance(std::int32_t a, std::int32_t b) const;
  double distance(Vertex u, Vertex v) const;
  // Level of the deepest common ancestor of the two leaves.
  int lca_level(Vertex u, Vertex v) const;
};

// Clones every supporting tree of every level and glues the leader clone of
// each cluster to its clone one level up.
ProjectedTree build_projected_tree(const Htsd& h);
Hst build_hst(const Htsd& h);

double tree_stretch(const ProjectedTree& t, const Edge& e);
double tree_stretch(const Hst& t, const Edge& e);
double p_stretch(double stretch, double p);

struct DominationReport {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  double min_ratio = kInfinity;  // min over u != v of dist_T / dist_G
  std::vector<std::pair<Vertex, Vertex>> examples;  // first few violating pairs
};

// Checks dist_T(u, v) >= dist_G(u, v) for every vertex pair of `g`.
DominationReport verify_domination(const ProjectedTree& t, const Graph& g, std::size_t cap = kDefaultApspCap);
DominationReport verify_domination(const Hst& t, const Graph& g, std::size_t cap = kDefaultApspCap);

}  // namespace lowdiam
