#pragma once

#include <cstdint>
#include <vector>

#include "lowdiam/decompose.hpp"
#include "lowdiam/graph.hpp"
#include "lowdiam/oracle.hpp"
#include "lowdiam/random.hpp"

namespace lowdiam {

// Hierarchical tree-supported decomposition D_0 .. D_k with diameter bounding
// sequence d_0 = 4 delta, d_i = d_{i-1} / 2, k the first index with d_k < 1.
struct Htsd {
  Vertex n = 0;
  std::vector<Edge> edges;  // input edges by edge id
  double c = 4.0;
  double delta = 0.0;
  std::vector<double> d;  // size k + 1
  int k = 0;
  std::vector<Tsd> levels;  // size k + 1

  std::vector<std::vector<std::int32_t>> cluster_of;      // [level][vertex]
  std::vector<std::vector<std::int32_t>> parent_cluster;  // [level][cluster], kNone on level 0
  std::vector<std::int32_t> decoupling;                   // per edge id
  std::vector<int> load;                                  // cumulative, per edge id
  // SSSP steps per iteration for each level > 0, merged across the level's clusters.
  std::vector<std::vector<int>> level_schedules;
};

Htsd build_htsd(const Graph& g, double c, const OracleConfig& cfg, RandomStream& stream, CallLedger& ledger);

// The unique i with the endpoints co-clustered on level i and separated on i + 1.
int decoupling_level(const Htsd& h, EdgeId e);
// d_i / l_e for the decoupling level i.
double htsd_stretch(const Htsd& h, EdgeId e);
double htsd_p_stretch(const Htsd& h, EdgeId e, double p);

// Merged SSSP count of a build: one diameter call plus every level's schedule.
std::uint64_t htsd_merged_calls(const Htsd& h);

}  // namespace lowdiam
