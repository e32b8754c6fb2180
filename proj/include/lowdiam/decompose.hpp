#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "lowdiam/blur.hpp"
#include "lowdiam/graph.hpp"
#include "lowdiam/oracle.hpp"
#include "lowdiam/random.hpp"

namespace lowdiam {

// Parameters of one decomposition with diameter budget `delta`. All derived
// quantities use log n of the ORIGINAL graph (`n`), also inside recursions.
struct DecomposeParams {
  double delta = 1.0;
  double c = 4.0;
  std::size_t n = 1;
  int iteration_cap = 0;  // 0 selects 64 c log n

  static DecomposeParams make(double delta, double c, std::size_t n);
  void validate() const;

  double log_n() const { return log2_at_least_one(n); }
  double beta() const { return c * log_n() / delta; }
  double eps() const { return 1.0 / (c * log_n() * log_n()); }
  double long_edge_threshold() const { return 1.0 / (40.0 * beta()); }
  double interior_margin() const { return (1.0 + eps()) / (4.0 * beta()); }
  double blur_alpha() const { return 1.0 / (2.0 * log_n()); }
  double blur_rho() const { return (1.0 - blur_alpha()) / (4.0 * beta()); }
  BlurParams blur_params() const { return BlurParams::with_alpha(blur_rho(), blur_alpha()); }
  int max_iterations() const;
};

struct TreeEdge {
  Vertex parent = 0;
  Vertex child = 0;
  EdgeId edge = kNone;
  double length = 0.0;
};

// A subtree of one SSSP tree; edges listed parents before children.
struct SupportingTree {
  Vertex root = 0;
  std::vector<Vertex> vertices;  // ascending
  std::vector<TreeEdge> edges;

  // Weighted height from the root.
  double depth() const;
  // Longest weighted path between two tree vertices.
  double diameter() const;
};

struct Cluster {
  std::vector<Vertex> members;  // ascending
  SupportingTree tree;
  std::vector<Vertex> core;  // interior the cluster was blurred from; empty for isolated singletons
  int iteration = 0;         // 0: emitted before the first iteration
};

struct Tsd {
  std::vector<Cluster> clusters;
  std::vector<EdgeId> deleted_edges;  // ascending
  std::vector<EdgeId> cut_edges;      // ascending
  std::map<EdgeId, int> loads;        // supporting trees containing each edge
  int iterations = 0;
  // SSSP steps per while-iteration: 2 + max blur rounds over the cells.
  std::vector<int> schedule;

  // Cluster index per global vertex id, kNone when absent.
  std::vector<std::int32_t> assignment(Vertex universe) const;
  // Steps of `schedule` summed, the merged SSSP count of a standalone run.
  std::uint64_t merged_calls() const;
};

class IterationCapExceeded : public std::runtime_error {
 public:
  explicit IterationCapExceeded(int cap)
      : std::runtime_error("ts_decompose exceeded its iteration cap of " + std::to_string(cap)), cap_(cap) {}
  int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

// Exponential-shift cells, boundary separation and per-cell blurring,
// repeated until every vertex is clustered.
Tsd ts_decompose(const Graph& g, const DecomposeParams& params, const OracleConfig& cfg, RandomStream& stream,
                 CallLedger& ledger);

namespace detail {
// Oracle calls are tagged batched at `level`; the caller owns the merged count.
Tsd decompose_batched(const Graph& g, const DecomposeParams& params, const OracleConfig& cfg, RandomStream& stream,
                      CallLedger& ledger, std::int32_t level);
std::vector<EdgeId> cut_edges_of(const Graph& g, const std::vector<std::int32_t>& assignment);
}  // namespace detail

}  // namespace lowdiam
