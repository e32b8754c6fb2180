#include "lowdiam/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lowdiam {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

constexpr double kRelTol = 1e-12;
constexpr std::size_t kMaxExamples = 8;

void check_pair(DominationReport& r, Vertex u, Vertex v, double tree, double graph) {
  ++r.pairs;
  r.min_ratio = std::min(r.min_ratio, tree / graph);
  if (tree < graph * (1.0 - kRelTol)) {
    ++r.violations;
    if (r.examples.size() < kMaxExamples) r.examples.emplace_back(u, v);
  }
}

}  // namespace

bool ProjectedTree::is_tree() const {
  if (projection.empty()) return false;
  if (links.size() + 1 != projection.size()) return false;
  DisjointSets ds(projection.size());
  for (const auto& l : links) {
    const auto a = ds.find(static_cast<std::size_t>(l.a));
    const auto b = ds.find(static_cast<std::size_t>(l.b));
    if (a == b) return false;
    ds.unite(a, b);
  }
  return true;
}

std::vector<double> ProjectedTree::distances_from(std::int32_t node) const {
  const std::size_t n = projection.size();
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& l : links) {
    ++offsets[static_cast<std::size_t>(l.a) + 1];
    ++offsets[static_cast<std::size_t>(l.b) + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<std::pair<std::int32_t, double>> adj(offsets.back());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& l : links) {
    adj[fill[static_cast<std::size_t>(l.a)]++] = {l.b, l.length};
    adj[fill[static_cast<std::size_t>(l.b)]++] = {l.a, l.length};
  }
  std::vector<double> dist(n, kInfinity);
  std::vector<std::int32_t> stack{node};
  dist[static_cast<std::size_t>(node)] = 0.0;
  while (!stack.empty()) {
    const auto x = static_cast<std::size_t>(stack.back());
    stack.pop_back();
    for (std::size_t j = offsets[x]; j < offsets[x + 1]; ++j) {
      const auto [y, len] = adj[j];
      if (dist[static_cast<std::size_t>(y)] == kInfinity) {
        dist[static_cast<std::size_t>(y)] = dist[x] + len;
        stack.push_back(y);
      }
    }
  }
  return dist;
}

double ProjectedTree::distance(Vertex u, Vertex v) const {
  const auto d = distances_from(embedding[static_cast<std::size_t>(u)]);
  return d[static_cast<std::size_t>(embedding[static_cast<std::size_t>(v)])];
}

ProjectedTree build_projected_tree(const Htsd& h) {
  // Clone numbering: level by level, cluster by cluster, tree vertices ascending.
  std::vector<std::vector<std::size_t>> base(h.levels.size());
  std::size_t clones = 0;
  for (std::size_t i = 0; i < h.levels.size(); ++i) {
    for (const auto& c : h.levels[i].clusters) {
      base[i].push_back(clones);
      clones += c.tree.vertices.size();
    }
  }
  auto clone = [&](std::size_t level, std::size_t ci, Vertex v) {
    const auto& vs = h.levels[level].clusters[ci].tree.vertices;
    const auto it = std::lower_bound(vs.begin(), vs.end(), v);
    if (it == vs.end() || *it != v) {
      throw std::logic_error("build_projected_tree: vertex " + std::to_string(v) + " missing from supporting tree");
    }
    return base[level][ci] + static_cast<std::size_t>(it - vs.begin());
  };

  DisjointSets ds(clones);
  for (std::size_t i = 1; i < h.levels.size(); ++i) {
    for (std::size_t ci = 0; ci < h.levels[i].clusters.size(); ++ci) {
      const Vertex leader = h.levels[i].clusters[ci].members.front();
      const auto up = static_cast<std::size_t>(h.parent_cluster[i][ci]);
      ds.unite(clone(i, ci, leader), clone(i - 1, up, leader));
    }
  }

  ProjectedTree t;
  std::vector<std::int32_t> node_of(clones, kNone);
  std::vector<std::int32_t> class_node(clones, kNone);
  for (std::size_t i = 0; i < h.levels.size(); ++i) {
    for (std::size_t ci = 0; ci < h.levels[i].clusters.size(); ++ci) {
      const auto& vs = h.levels[i].clusters[ci].tree.vertices;
      for (std::size_t j = 0; j < vs.size(); ++j) {
        const std::size_t x = base[i][ci] + j;
        const std::size_t r = ds.find(x);
        if (class_node[r] == kNone) {
          class_node[r] = static_cast<std::int32_t>(t.projection.size());
          t.projection.push_back(vs[j]);
        }
        node_of[x] = class_node[r];
      }
    }
  }

  t.load.assign(h.edges.size(), 0);
  for (std::size_t i = 0; i < h.levels.size(); ++i) {
    for (std::size_t ci = 0; ci < h.levels[i].clusters.size(); ++ci) {
      for (const auto& e : h.levels[i].clusters[ci].tree.edges) {
        t.links.push_back(ProjectedTree::Link{node_of[clone(i, ci, e.parent)], node_of[clone(i, ci, e.child)], e.edge,
                                              e.length});
        ++t.load[static_cast<std::size_t>(e.edge)];
      }
    }
  }

  const auto k = static_cast<std::size_t>(h.k);
  t.embedding.assign(static_cast<std::size_t>(h.n), kNone);
  for (Vertex v = 0; v < h.n; ++v) {
    const auto ci = static_cast<std::size_t>(h.cluster_of[k][static_cast<std::size_t>(v)]);
    t.embedding[static_cast<std::size_t>(v)] = node_of[clone(k, ci, v)];
  }
  return t;
}

Hst build_hst(const Htsd& h) {
  Hst t;
  t.k = h.k;
  std::vector<std::size_t> first(h.levels.size(), 0);
  for (std::size_t i = 0; i < h.levels.size(); ++i) {
    first[i] = t.nodes.size();
    for (std::size_t ci = 0; ci < h.levels[i].clusters.size(); ++ci) {
      Hst::Node node;
      node.level = static_cast<int>(i);
      node.cluster = static_cast<std::int32_t>(ci);
      node.leader = h.levels[i].clusters[ci].members.front();
      if (i > 0) {
        node.parent = static_cast<std::int32_t>(first[i - 1] + static_cast<std::size_t>(h.parent_cluster[i][ci]));
        node.parent_length = h.d[i - 1];
      }
      t.nodes.push_back(node);
    }
  }
  const auto k = static_cast<std::size_t>(h.k);
  t.leaf_of.assign(static_cast<std::size_t>(h.n), kNone);
  for (Vertex v = 0; v < h.n; ++v) {
    t.leaf_of[static_cast<std::size_t>(v)] =
        static_cast<std::int32_t>(first[k] + static_cast<std::size_t>(h.cluster_of[k][static_cast<std::size_t>(v)]));
  }
  return t;
}

double Hst::node_distance(std::int32_t a, std::int32_t b) const {
  double total = 0.0;
  while (a != b) {
    const auto& na = nodes[static_cast<std::size_t>(a)];
    const auto& nb = nodes[static_cast<std::size_t>(b)];
    if (na.level >= nb.level) {
      total += na.parent_length;
      a = na.parent;
    } else {
      total += nb.parent_length;
      b = nb.parent;
    }
  }
  return total;
}

double Hst::distance(Vertex u, Vertex v) const {
  return node_distance(leaf_of[static_cast<std::size_t>(u)], leaf_of[static_cast<std::size_t>(v)]);
}

int Hst::lca_level(Vertex u, Vertex v) const {
  std::int32_t a = leaf_of[static_cast<std::size_t>(u)];
  std::int32_t b = leaf_of[static_cast<std::size_t>(v)];
  while (a != b) {
    const auto& na = nodes[static_cast<std::size_t>(a)];
    const auto& nb = nodes[static_cast<std::size_t>(b)];
    if (na.level >= nb.level) {
      a = na.parent;
    } else {
      b = nb.parent;
    }
  }
  return nodes[static_cast<std::size_t>(a)].level;
}

double tree_stretch(const ProjectedTree& t, const Edge& e) { return t.distance(e.u, e.v) / e.length; }

double tree_stretch(const Hst& t, const Edge& e) { return t.distance(e.u, e.v) / e.length; }

double p_stretch(double stretch, double p) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("p must lie in (0, 1]");
  return std::pow(stretch, p);
}

DominationReport verify_domination(const ProjectedTree& t, const Graph& g, std::size_t cap) {
  const Eigen::MatrixXd apsp = all_pairs_distances(g, cap);
  DominationReport r;
  for (std::size_t a = 0; a < g.order(); ++a) {
    const Vertex u = g.id(a);
    const auto dist = t.distances_from(t.embedding[static_cast<std::size_t>(u)]);
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      const Vertex v = g.id(b);
      check_pair(r, u, v, dist[static_cast<std::size_t>(t.embedding[static_cast<std::size_t>(v)])],
                 apsp(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
    }
  }
  return r;
}

DominationReport verify_domination(const Hst& t, const Graph& g, std::size_t cap) {
  const Eigen::MatrixXd apsp = all_pairs_distances(g, cap);
  DominationReport r;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      check_pair(r, g.id(a), g.id(b), t.distance(g.id(a), g.id(b)),
                 apsp(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
    }
  }
  return r;
}

}  // namespace lowdiam
