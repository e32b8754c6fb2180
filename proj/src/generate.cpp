#include "lowdiam/generate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "lowdiam/random.hpp"

namespace lowdiam {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError("generate: " + what);
}

void require_weight(double w) { require(w >= 1.0 && std::floor(w) == w, "weights must be positive integers"); }

// Component label per vertex, labels ordered by smallest member.
std::vector<std::int32_t> components(Vertex n, const std::vector<Edge>& edges) {
  std::vector<std::int32_t> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : edges) {
    const auto a = find(e.u);
    const auto b = find(e.v);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::int32_t> label(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = find(v);
  return label;
}

}  // namespace

Graph make_path(Vertex n, double w) {
  require(n >= 1, "path needs n >= 1");
  require_weight(w);
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, w});
  return Graph::from_edges(n, std::move(edges));
}

Graph make_cycle(Vertex n, double w) {
  require(n >= 3, "cycle needs n >= 3");
  require_weight(w);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, w});
  return Graph::from_edges(n, std::move(edges));
}

Graph make_grid(Vertex a, Vertex b, double w) {
  require(a >= 1 && b >= 1, "grid needs positive sides");
  require_weight(w);
  std::vector<Edge> edges;
  for (Vertex r = 0; r < a; ++r) {
    for (Vertex c = 0; c < b; ++c) {
      const Vertex v = r * b + c;
      if (c + 1 < b) edges.push_back({v, v + 1, w});
      if (r + 1 < a) edges.push_back({v, v + b, w});
    }
  }
  return Graph::from_edges(a * b, std::move(edges));
}

Graph make_gnp(Vertex n, double p, int wmax, std::uint64_t seed) {
  require(n >= 1, "gnp needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "gnp needs p in [0, 1]");
  require(wmax >= 1, "gnp needs wmax >= 1");
  RandomStream edge_stream(seed, 0x676e70);
  auto weight = [&] {
    return static_cast<double>(1 + static_cast<int>(edge_stream.next_unit() * wmax));
  };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge_stream.next_unit() < p) edges.push_back({u, v, weight()});
    }
  }
  const auto label = components(n, edges);
  // Join every other component to the one holding vertex 0 through its smallest member.
  for (Vertex v = 1; v < n; ++v) {
    if (label[static_cast<std::size_t>(v)] == v && label[0] != v) edges.push_back({0, v, weight()});
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph make_geometric(Vertex n, double r, double wscale, std::uint64_t seed) {
  require(n >= 1, "geometric needs n >= 1");
  require(r >= 0.0, "geometric needs r >= 0");
  require(wscale > 0.0, "geometric needs wscale > 0");
  RandomStream point_stream(seed, 0x67656f);
  std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
  for (auto& [x, y] : pts) {
    x = point_stream.next_unit();
    y = point_stream.next_unit();
  }
  auto dist = [&](Vertex u, Vertex v) {
    const auto& a = pts[static_cast<std::size_t>(u)];
    const auto& b = pts[static_cast<std::size_t>(v)];
    return std::hypot(a.first - b.first, a.second - b.second);
  };
  auto weight = [&](Vertex u, Vertex v) { return std::max(1.0, std::ceil(dist(u, v) * wscale)); };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist(u, v) <= r) edges.push_back({u, v, weight(u, v)});
    }
  }
  const auto label = components(n, edges);
  std::vector<char> joined(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) joined[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(v)] == label[0];
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) members[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
  for (Vertex root = 1; root < n; ++root) {
    if (label[static_cast<std::size_t>(root)] != root || joined[static_cast<std::size_t>(root)]) continue;
    Vertex bu = 0;
    Vertex bv = root;
    double best = kInfinity;
    for (Vertex u = 0; u < n; ++u) {
      if (!joined[static_cast<std::size_t>(u)]) continue;
      for (Vertex v : members[static_cast<std::size_t>(root)]) {
        const double d = dist(u, v);
        if (d < best) {
          best = d;
          bu = u;
          bv = v;
        }
      }
    }
    edges.push_back({std::min(bu, bv), std::max(bu, bv), weight(bu, bv)});
    for (Vertex v : members[static_cast<std::size_t>(root)]) joined[static_cast<std::size_t>(v)] = 1;
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph generate_graph(const std::string& spec) {
  const auto open = spec.find('(');
  const auto close = spec.rfind(')');
  require(open != std::string::npos && close == spec.size() - 1 && close > open, "malformed spec '" + spec + "'");
  std::string kind = spec.substr(0, open);
  std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char ch) { return std::tolower(ch); });
  std::vector<double> args;
  std::stringstream body(spec.substr(open + 1, close - open - 1));
  for (std::string item; std::getline(body, item, ',');) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    require(used == item.size() && !item.empty(), "bad argument '" + item + "' in '" + spec + "'");
    args.push_back(x);
  }
  auto arg = [&](std::size_t i, double fallback) { return i < args.size() ? args[i] : fallback; };
  auto count = [&](std::size_t i) {
    require(i < args.size(), "missing size in '" + spec + "'");
    const double x = args[i];
    require(x >= 0.0 && std::floor(x) == x && x < 1e9, "sizes must be non-negative integers in '" + spec + "'");
    return static_cast<Vertex>(x);
  };
  auto seed = [&](std::size_t i) { return static_cast<std::uint64_t>(arg(i, 0.0)); };

  if (kind == "path") {
    require(args.size() <= 2, "too many arguments in '" + spec + "'");
    return make_path(count(0), arg(1, 1.0));
  }
  if (kind == "cycle") {
    require(args.size() <= 2, "too many arguments in '" + spec + "'");
    return make_cycle(count(0), arg(1, 1.0));
  }
  if (kind == "grid") {
    require(args.size() >= 2 && args.size() <= 3, "grid takes (a, b[, w]) in '" + spec + "'");
    return make_grid(count(0), count(1), arg(2, 1.0));
  }
  if (kind == "gnp") {
    require(args.size() >= 2 && args.size() <= 4, "gnp takes (n, p[, wmax[, seed]]) in '" + spec + "'");
    return make_gnp(count(0), arg(1, 0.0), static_cast<int>(arg(2, 1.0)), seed(3));
  }
  if (kind == "geometric") {
    require(args.size() >= 2 && args.size() <= 4, "geometric takes (n, r[, wscale[, seed]]) in '" + spec + "'");
    return make_geometric(count(0), arg(1, 0.0), arg(2, 1.0), seed(3));
  }
  throw GraphError("generate: unknown graph family '" + kind + "'");
}

std::vector<CorpusEntry> standing_corpus() {
  std::vector<CorpusEntry> out;
  for (int n : {16, 64, 256, 1024}) {
    const int side = static_cast<int>(std::lround(std::sqrt(n)));
    const double p = std::min(0.3, 6.4 / n);
    const double r = std::sqrt(3.0 * std::log(static_cast<double>(n)) / (3.141592653589793 * n));
    char buf[128];
    const std::string ns = std::to_string(n);
    out.push_back({"path_" + ns, "path(" + ns + ",1)"});
    out.push_back({"cycle_" + ns, "cycle(" + ns + ",1)"});
    out.push_back({"grid_" + ns, "grid(" + std::to_string(side) + "," + std::to_string(side) + ",1)"});
    std::snprintf(buf, sizeof buf, "gnp(%d,%.17g,10,%d)", n, p, n);
    out.push_back({"gnp_" + ns, buf});
    std::snprintf(buf, sizeof buf, "geometric(%d,%.17g,10,%d)", n, r, n);
    out.push_back({"geometric_" + ns, buf});
  }
  return out;
}

}  // namespace lowdiam
