#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lowdiam/graph.hpp"

namespace lowdiam {

Graph make_path(Vertex n, double w = 1.0);
Graph make_cycle(Vertex n, double w = 1.0);
Graph make_grid(Vertex a, Vertex b, double w = 1.0);
// Integer weights uniform in [1, wmax]; components are joined until connected.
Graph make_gnp(Vertex n, double p, int wmax, std::uint64_t seed);
// Points in the unit square, edges between points at distance <= r with
// weight ceil(distance * wscale) (at least 1); components are joined by their
// closest point pairs.
Graph make_geometric(Vertex n, double r, double wscale, std::uint64_t seed);

// "path(n,w)", "cycle(n,w)", "grid(a,b,w)", "gnp(n,p,wmax,seed)",
// "geometric(n,r,wscale,seed)"; trailing arguments may be omitted.
Graph generate_graph(const std::string& spec);

struct CorpusEntry {
  std::string name;
  std::string spec;
};

// path, cycle, grid, gnp and geometric graphs at n in {16, 64, 256, 1024}.
std::vector<CorpusEntry> standing_corpus();

}  // namespace lowdiam
