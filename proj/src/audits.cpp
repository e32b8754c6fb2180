#include "lowdiam/audits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

namespace lowdiam {

namespace {

constexpr double kSlack = 1e-9;

std::string vstr(Vertex v) { return std::to_string(v); }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool subset(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Violations check_partition(const Graph& g, const Tsd& tsd, const std::string& where) {
  Violations out;
  std::vector<int> hits(static_cast<std::size_t>(g.universe()), 0);
  for (const auto& c : tsd.clusters) {
    if (c.members.empty()) out.push_back(where + ": empty cluster");
    if (!std::is_sorted(c.members.begin(), c.members.end())) out.push_back(where + ": unsorted cluster");
    for (Vertex v : c.members) {
      if (!g.contains(v)) {
        out.push_back(where + ": vertex " + vstr(v) + " not in graph");
        continue;
      }
      ++hits[static_cast<std::size_t>(v)];
    }
  }
  for (Vertex v : g.vertices()) {
    const int h = hits[static_cast<std::size_t>(v)];
    if (h != 1) out.push_back(where + ": vertex " + vstr(v) + " lies in " + std::to_string(h) + " clusters");
  }
  return out;
}

void append(Violations& out, Violations more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

Violations audit_blur(const Graph& g, const BlurParams& params, std::span<const Vertex> seed_set,
                      const BlurResult& result) {
  Violations out;
  std::vector<Vertex> seed(seed_set.begin(), seed_set.end());
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  if (!subset(seed, result.set)) out.push_back("blur: seed set not contained in U");
  if (result.trace.initial != seed) out.push_back("blur: trace does not start from the seed set");
  std::size_t prev = seed.size();
  for (const auto& r : result.trace.rounds) {
    if (r.radius < 0.0 || r.radius > r.radius_cap) out.push_back("blur: radius outside [0, cap] in round " + std::to_string(r.index));
    if (r.size != prev + r.absorbed.size()) out.push_back("blur: non-monotone growth in round " + std::to_string(r.index));
    prev = r.size;
  }
  if (result.trace.set_after(result.trace.rounds.size()) != result.set) out.push_back("blur: trace does not end in U");
  if (!seed.empty()) {
    const double worst = distance_from_set(g, seed, result.set);
    const double bound = params.radius_bound();
    if (worst > bound * (1.0 + kSlack)) {
      out.push_back("blur: dist(b, U) = " + num(worst) + " exceeds rho/(1-alpha) = " + num(bound));
    }
  } else if (!result.set.empty()) {
    out.push_back("blur: empty seed produced a nonempty set");
  }
  return out;
}

Violations audit_blur_safety(const Graph& g, const BlurParams& params, const BlurResult& result) {
  Violations out;
  if (result.trace.initial.empty()) return out;
  std::vector<char> in_u(g.order(), 0);
  for (Vertex v : result.set) in_u[*g.local(v)] = 1;
  double remaining = params.radius_bound();
  for (std::size_t i = 0; i <= result.trace.rounds.size(); ++i) {
    const auto set = result.trace.set_after(i);
    const SsspTree t = exact_sssp(contract_into_super_source(g, set));
    std::vector<char> in_set(g.order(), 0);
    for (Vertex v : set) in_set[*g.local(v)] = 1;
    auto dist = [&](std::size_t local) { return in_set[local] ? 0.0 : t.distance_to(g.id(local)); };
    for (std::size_t e = 0; e < g.size(); ++e) {
      const std::size_t a = g.local_u(e);
      const std::size_t b = g.local_v(e);
      const bool safe = (in_set[a] && in_set[b]) || (dist(a) >= remaining && dist(b) >= remaining);
      if (safe && in_u[a] != in_u[b]) {
        out.push_back("blur: edge " + std::to_string(g.edge_ids()[e]) + " safe after step " + std::to_string(i) +
                      " but cut");
      }
    }
    remaining *= params.alpha;
  }
  return out;
}

Violations audit_supporting_tree(const Graph& g, const SupportingTree& tree) {
  Violations out;
  const std::string where = "tree rooted at " + vstr(tree.root);
  if (!std::is_sorted(tree.vertices.begin(), tree.vertices.end()) ||
      std::adjacent_find(tree.vertices.begin(), tree.vertices.end()) != tree.vertices.end()) {
    out.push_back(where + ": vertex list not strictly ascending");
    return out;
  }
  if (!std::binary_search(tree.vertices.begin(), tree.vertices.end(), tree.root)) out.push_back(where + ": root not spanned");
  if (tree.edges.size() + 1 != tree.vertices.size()) {
    out.push_back(where + ": " + std::to_string(tree.edges.size()) + " edges on " + std::to_string(tree.vertices.size()) +
                  " vertices");
  }
  std::vector<std::size_t> parent(tree.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](Vertex v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(tree.vertices.begin(), tree.vertices.end(), v);
    if (it == tree.vertices.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - tree.vertices.begin());
  };
  for (const auto& e : tree.edges) {
    if (e.edge < 0) {
      out.push_back(where + ": edge without graph id");
      continue;
    }
    const auto ids = g.edge_ids();
    const auto it = std::lower_bound(ids.begin(), ids.end(), e.edge);
    if (it == ids.end() || *it != e.edge) {
      out.push_back(where + ": edge " + std::to_string(e.edge) + " not in graph");
      continue;
    }
    const Edge& ge = g.edges()[static_cast<std::size_t>(it - ids.begin())];
    if (std::minmax(e.parent, e.child) != std::minmax(ge.u, ge.v) || e.length != ge.length) {
      out.push_back(where + ": edge " + std::to_string(e.edge) + " does not match the graph");
    }
    const auto a = index(e.parent);
    const auto b = index(e.child);
    if (!a || !b) {
      out.push_back(where + ": edge " + std::to_string(e.edge) + " leaves the vertex set");
      continue;
    }
    const auto ra = find(*a);
    const auto rb = find(*b);
    if (ra == rb) {
      out.push_back(where + ": cycle through edge " + std::to_string(e.edge));
      continue;
    }
    parent[ra] = rb;
  }
  return out;
}

Violations audit_tsd(const Graph& g, const DecomposeParams& params, const Tsd& tsd) {
  Violations out = check_partition(g, tsd, "tsd");
  const double threshold = params.long_edge_threshold();

  std::vector<char> deleted(g.size(), 0);
  for (EdgeId e : tsd.deleted_edges) {
    const auto ids = g.edge_ids();
    const auto it = std::lower_bound(ids.begin(), ids.end(), e);
    if (it == ids.end() || *it != e) {
      out.push_back("tsd: deleted edge " + std::to_string(e) + " not in graph");
      continue;
    }
    deleted[static_cast<std::size_t>(it - ids.begin())] = 1;
  }
  for (std::size_t e = 0; e < g.size(); ++e) {
    const bool is_long = g.edges()[e].length > threshold;
    if (is_long != static_cast<bool>(deleted[e])) {
      out.push_back("tsd: edge " + std::to_string(g.edge_ids()[e]) + (is_long ? " long but kept" : " deleted but short"));
    }
  }

  std::map<EdgeId, int> loads;
  for (const auto& c : tsd.clusters) {
    append(out, audit_supporting_tree(g, c.tree));
    if (!subset(c.members, c.tree.vertices)) out.push_back("tsd: cluster not contained in its cell");
    for (const auto& e : c.tree.edges) ++loads[e.edge];
    if (!c.core.empty()) {
      if (!subset(c.core, c.members)) out.push_back("tsd: interior not contained in its cluster");
      const Graph cell = g.induced(c.tree.vertices);
      const Graph kept = cell.filter_edges([&](std::size_t e) { return !(cell.edges()[e].length > threshold); });
      const double worst = distance_from_set(kept, c.core, c.members);
      const double bound = params.blur_params().radius_bound();
      if (worst > bound * (1.0 + kSlack)) {
        out.push_back("tsd: cluster at root " + vstr(c.tree.root) + " reaches " + num(worst) + " beyond its interior");
      }
    }
  }
  if (loads != tsd.loads) out.push_back("tsd: stored loads differ from the supporting trees");
  for (const auto& [e, l] : loads) {
    if (l > tsd.iterations) out.push_back("tsd: load of edge " + std::to_string(e) + " exceeds the iteration count");
  }
  const auto recount = detail::cut_edges_of(g, tsd.assignment(g.universe()));
  if (recount != tsd.cut_edges) out.push_back("tsd: stored cut set differs from the partition");
  if (static_cast<int>(tsd.schedule.size()) != tsd.iterations) out.push_back("tsd: schedule length differs from iterations");
  return out;
}

double max_tree_diameter(const Tsd& tsd) {
  double worst = 0.0;
  for (const auto& c : tsd.clusters) worst = std::max(worst, c.tree.diameter());
  return worst;
}

double max_tree_depth(const Tsd& tsd) {
  double worst = 0.0;
  for (const auto& c : tsd.clusters) worst = std::max(worst, c.tree.depth());
  return worst;
}

Violations audit_htsd(const Graph& g, const Htsd& h, std::optional<double> exact_diameter) {
  Violations out;
  const std::size_t levels = h.levels.size();
  if (h.d.size() != levels || h.k + 1 != static_cast<int>(levels)) {
    out.push_back("htsd: level count disagrees with k");
    return out;
  }
  if (g.order() > 1) {
    if (h.d[0] != 4.0 * h.delta) out.push_back("htsd: d_0 != 4 delta");
    for (std::size_t i = 1; i < levels; ++i) {
      if (h.d[i] != h.d[i - 1] / 2.0) out.push_back("htsd: d_" + std::to_string(i) + " is not half of its predecessor");
    }
    if (!(h.d.back() < 1.0)) out.push_back("htsd: d_k >= 1");
    if (levels > 1 && !(h.d[levels - 2] >= 1.0)) out.push_back("htsd: k is not the first index with d_k < 1");
    if (h.k > std::log2(4.0 * h.delta) + 1.0) out.push_back("htsd: k exceeds log2(4 delta) + 1");
    if (exact_diameter) {
      const double diam = *exact_diameter;
      if (h.delta < diam / 4.0 * (1.0 - kSlack) || h.delta > diam * (1.0 + kSlack)) {
        out.push_back("htsd: delta " + num(h.delta) + " outside [diam/4, diam] for diam " + num(diam));
      }
    }
  } else if (h.k != 0) {
    out.push_back("htsd: single vertex with k > 0");
  }

  if (h.levels[0].clusters.size() != 1) out.push_back("htsd: level 0 is not a single cluster");
  for (std::size_t i = 0; i < levels; ++i) {
    const std::string where = "htsd level " + std::to_string(i);
    append(out, check_partition(g, h.levels[i], where));
    if (h.parent_cluster[i].size() != h.levels[i].clusters.size()) {
      out.push_back(where + ": parent list size mismatch");
      continue;
    }
    for (std::size_t ci = 0; ci < h.levels[i].clusters.size(); ++ci) {
      const auto& c = h.levels[i].clusters[ci];
      append(out, audit_supporting_tree(g, c.tree));
      if (!subset(c.members, c.tree.vertices)) out.push_back(where + ": cluster not spanned by its tree");
      if (i == 0) continue;
      const auto pc = h.parent_cluster[i][ci];
      if (pc < 0 || static_cast<std::size_t>(pc) >= h.levels[i - 1].clusters.size()) {
        out.push_back(where + ": bad parent index");
        continue;
      }
      const auto& parent = h.levels[i - 1].clusters[static_cast<std::size_t>(pc)];
      if (!subset(c.members, parent.members)) out.push_back(where + ": cluster not nested in its parent");
      if (!subset(c.tree.vertices, parent.members)) out.push_back(where + ": supporting tree leaves the parent cluster");
    }
  }
  for (const auto& c : h.levels.back().clusters) {
    if (c.members.size() != 1) out.push_back("htsd: bottom level has a cluster of size " + std::to_string(c.members.size()));
  }

  std::vector<int> load(h.edges.size(), 0);
  for (const auto& level : h.levels) {
    for (const auto& c : level.clusters) {
      for (const auto& e : c.tree.edges) ++load[static_cast<std::size_t>(e.edge)];
    }
  }
  if (load != h.load) out.push_back("htsd: cumulative load differs from the recount");

  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const int i = h.decoupling[e];
    const auto eid = static_cast<EdgeId>(e);
    if (i < 0 || i >= h.k) {
      out.push_back("htsd: edge " + std::to_string(e) + " has no decoupling level");
      continue;
    }
    int first_cut = -1;
    for (std::size_t j = 0; j < levels; ++j) {
      const auto& cut = h.levels[j].cut_edges;
      if (std::binary_search(cut.begin(), cut.end(), eid)) {
        first_cut = static_cast<int>(j);
        break;
      }
    }
    if (first_cut != i + 1) out.push_back("htsd: edge " + std::to_string(e) + " decoupling disagrees with the cut sets");
    const auto u = static_cast<std::size_t>(h.edges[e].u);
    const auto v = static_cast<std::size_t>(h.edges[e].v);
    for (int j = 0; j <= i; ++j) {
      if (h.cluster_of[static_cast<std::size_t>(j)][u] != h.cluster_of[static_cast<std::size_t>(j)][v]) {
        out.push_back("htsd: edge " + std::to_string(e) + " separated above its decoupling level");
        break;
      }
    }
  }
  return out;
}

bool htsd_diameters_hold(const Htsd& h) {
  for (std::size_t i = 0; i < h.levels.size(); ++i) {
    if (max_tree_diameter(h.levels[i]) > h.d[i]) return false;
  }
  return true;
}

Violations audit_projected_tree(const Graph& g, const Htsd& h, const ProjectedTree& t, bool check_domination) {
  Violations out;
  if (!t.is_tree()) out.push_back("projected: not a tree");
  for (const auto& l : t.links) {
    if (l.edge < 0 || static_cast<std::size_t>(l.edge) >= h.edges.size()) {
      out.push_back("projected: link without a graph edge");
      continue;
    }
    const Edge& e = h.edges[static_cast<std::size_t>(l.edge)];
    const auto a = t.projection[static_cast<std::size_t>(l.a)];
    const auto b = t.projection[static_cast<std::size_t>(l.b)];
    if (std::minmax(a, b) != std::minmax(e.u, e.v)) out.push_back("projected: link endpoints do not project onto its edge");
    if (l.length != e.length) out.push_back("projected: link length differs from its edge");
  }
  for (Vertex v = 0; v < h.n; ++v) {
    const auto node = t.embedding[static_cast<std::size_t>(v)];
    if (node < 0 || t.projection[static_cast<std::size_t>(node)] != v) {
      out.push_back("projected: vertex " + vstr(v) + " not embedded onto itself");
    }
  }
  if (t.load != h.load) out.push_back("projected: preimage loads differ from the cumulative loads");

  if (!out.empty()) return out;
  std::vector<std::vector<std::size_t>> by_u(static_cast<std::size_t>(h.n));
  for (std::size_t e = 0; e < h.edges.size(); ++e) by_u[static_cast<std::size_t>(h.edges[e].u)].push_back(e);
  for (Vertex u = 0; u < h.n; ++u) {
    if (by_u[static_cast<std::size_t>(u)].empty()) continue;
    const auto dist = t.distances_from(t.embedding[static_cast<std::size_t>(u)]);
    for (std::size_t e : by_u[static_cast<std::size_t>(u)]) {
      const int i = h.decoupling[e];
      double cap = 0.0;
      for (int j = i; j < h.k; ++j) cap += 2.0 * h.d[static_cast<std::size_t>(j)];
      const double got =
          dist[static_cast<std::size_t>(t.embedding[static_cast<std::size_t>(h.edges[e].v)])];
      if (got > cap * (1.0 + kSlack) || cap > 4.0 * h.d[static_cast<std::size_t>(i)]) {
        out.push_back("projected: edge " + std::to_string(e) + " tree distance " + num(got) + " above " + num(cap));
      }
    }
  }
  if (check_domination) {
    const auto rep = verify_domination(t, g);
    if (rep.violations > 0) out.push_back("projected: " + std::to_string(rep.violations) + " dominated pairs violated");
  }
  return out;
}

Violations audit_hst(const Graph& g, const Htsd& h, const Hst& t, bool check_domination) {
  Violations out;
  if (t.nodes.empty() || t.nodes[0].parent != kNone || t.nodes[0].level != 0) {
    out.push_back("hst: malformed root");
    return out;
  }
  std::vector<int> children(t.nodes.size(), 0);
  for (std::size_t x = 1; x < t.nodes.size(); ++x) {
    const auto& node = t.nodes[x];
    if (node.parent < 0) {
      out.push_back("hst: second root");
      continue;
    }
    const auto& up = t.nodes[static_cast<std::size_t>(node.parent)];
    ++children[static_cast<std::size_t>(node.parent)];
    if (up.level + 1 != node.level) out.push_back("hst: parent not one level up");
    if (node.parent_length != h.d[static_cast<std::size_t>(up.level)]) out.push_back("hst: edge length is not d_i");
    if (up.parent != kNone && node.parent_length * 2.0 != up.parent_length) out.push_back("hst: not 2-separated");
  }
  for (std::size_t x = 0; x < t.nodes.size(); ++x) {
    if (children[x] == 0 && t.nodes[x].level != t.k) out.push_back("hst: leaf above depth k");
  }

  // Leaders and closed-form ancestor distances.
  std::vector<double> tail(static_cast<std::size_t>(t.k) + 1, 0.0);
  for (int i = t.k - 1; i >= 0; --i) tail[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i) + 1] + h.d[static_cast<std::size_t>(i)];
  for (Vertex v = 0; v < h.n; ++v) {
    std::int32_t x = t.leaf_of[static_cast<std::size_t>(v)];
    if (x < 0 || t.nodes[static_cast<std::size_t>(x)].level != t.k) {
      out.push_back("hst: vertex " + vstr(v) + " not at a leaf");
      continue;
    }
    double walked = 0.0;
    while (true) {
      const auto& node = t.nodes[static_cast<std::size_t>(x)];
      const double expect = tail[static_cast<std::size_t>(node.level)];
      if (std::abs(walked - expect) > kSlack * std::max(1.0, expect)) {
        out.push_back("hst: ancestor distance of vertex " + vstr(v) + " at level " + std::to_string(node.level) + " is " +
                      num(walked) + ", expected " + num(expect));
      }
      const auto& members = h.levels[static_cast<std::size_t>(node.level)].clusters[static_cast<std::size_t>(node.cluster)].members;
      if (node.leader != members.front()) out.push_back("hst: leader is not the smallest member");
      if (node.parent == kNone) break;
      walked += node.parent_length;
      x = node.parent;
    }
  }
  // A leader keeps leading every descendant cluster that still contains it.
  for (std::size_t i = 0; i + 1 < h.levels.size(); ++i) {
    for (const auto& c : h.levels[i].clusters) {
      const Vertex lead = c.members.front();
      for (std::size_t j = i + 1; j < h.levels.size(); ++j) {
        const auto cj = h.cluster_of[j][static_cast<std::size_t>(lead)];
        if (h.levels[j].clusters[static_cast<std::size_t>(cj)].members.front() != lead) {
          out.push_back("hst: leader " + vstr(lead) + " loses leadership at level " + std::to_string(j));
          break;
        }
      }
    }
  }
  if (check_domination) {
    const auto rep = verify_domination(t, g);
    if (rep.violations > 0) out.push_back("hst: " + std::to_string(rep.violations) + " dominated pairs violated");
  }
  return out;
}

}  // namespace lowdiam
