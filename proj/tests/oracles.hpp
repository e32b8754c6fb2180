#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's shortest-path code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/random.hpp"

namespace oracle {

using lowdiam::Edge;
using lowdiam::Vertex;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

using Matrix = std::vector<std::vector<double>>;

inline Matrix floyd_warshall(Vertex n, const std::vector<Edge>& edges) {
  const auto sz = static_cast<std::size_t>(n);
  Matrix d(sz, std::vector<double>(sz, kInf));
  for (std::size_t i = 0; i < sz; ++i) d[i][i] = 0.0;
  for (const auto& e : edges) {
    auto& a = d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    a = std::min(a, e.length);
    d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = a;
  }
  for (std::size_t k = 0; k < sz; ++k) {
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = 0; j < sz; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// Shortest simple-path length by exhaustive enumeration; only for tiny graphs.
inline double brute_force_distance(Vertex n, const std::vector<Edge>& edges, Vertex s, Vertex t) {
  std::vector<std::vector<std::pair<Vertex, double>>> adj(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.length);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.length);
  }
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  double best = kInf;
  std::function<void(Vertex, double)> walk = [&](Vertex x, double len) {
    if (x == t) {
      best = std::min(best, len);
      return;
    }
    on_path[static_cast<std::size_t>(x)] = 1;
    for (const auto& [y, w] : adj[static_cast<std::size_t>(x)]) {
      if (!on_path[static_cast<std::size_t>(y)]) walk(y, len + w);
    }
    on_path[static_cast<std::size_t>(x)] = 0;
  };
  walk(s, 0.0);
  return best;
}

inline std::vector<int> component_labels(Vertex n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> queue{s};
    label[static_cast<std::size_t>(s)] = next;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (Vertex y : adj[static_cast<std::size_t>(queue[h])]) {
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool connected(Vertex n, const std::vector<Edge>& edges) {
  const auto l = component_labels(n, edges);
  return std::all_of(l.begin(), l.end(), [](int x) { return x == 0; });
}

// Random connected graph: a random spanning tree plus extra edges, integer weights.
inline std::vector<Edge> random_connected_edges(Vertex n, int extra, int wmax, std::uint64_t seed) {
  lowdiam::RandomStream rs(seed, 77);
  auto pick = [&](Vertex hi) { return static_cast<Vertex>(rs.next_unit() * hi); };
  auto weight = [&] { return static_cast<double>(1 + static_cast<int>(rs.next_unit() * wmax)); };
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({pick(v), v, weight()});
  for (int i = 0; i < extra && n > 1; ++i) {
    Vertex a = pick(n);
    Vertex b = pick(n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const bool dup = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
      return std::min(e.u, e.v) == a && std::max(e.u, e.v) == b;
    });
    if (!dup) edges.push_back({a, b, weight()});
  }
  return edges;
}

}  // namespace oracle
