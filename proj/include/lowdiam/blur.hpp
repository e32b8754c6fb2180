#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/oracle.hpp"
#include "lowdiam/random.hpp"

namespace lowdiam {

// log2(n) floored at 1, the "log n" used by every parameter formula.
double log2_at_least_one(std::size_t n);

struct BlurParams {
  double rho = 1.0;
  double alpha = 0.5;  // in (0, 1/2]
  double eps = 0.25;   // SSSP error used in perturbed mode, at most alpha^2

  // alpha = 1 / (2 log2 n), eps = alpha^2.
  static BlurParams for_graph(double rho, std::size_t n);
  static BlurParams with_alpha(double rho, double alpha);

  void validate() const;
  double radius_bound() const { return rho / (1.0 - alpha); }
};

struct BlurRound {
  int index = 0;            // i >= 1
  double radius_cap = 0.0;  // alpha^(i-1) rho
  double radius = 0.0;      // r^[i]
  std::size_t size = 0;     // |B^[i]|
  std::vector<Vertex> absorbed;  // B^[i] \ B^[i-1], ascending
};

struct BlurTrace {
  std::vector<Vertex> initial;  // B^[0]
  std::vector<BlurRound> rounds;

  // B^[i] for 0 <= i <= rounds.size().
  std::vector<Vertex> set_after(std::size_t i) const;
};

struct BlurResult {
  std::vector<Vertex> set;  // U, ascending
  BlurTrace trace;
};

// Grows `seed_set` by geometrically shrinking uniform radii, each round one
// approximate SSSP from the contracted current set. `tag` supplies the batch
// coordinates (level, iteration, batched); phase and step are filled in.
BlurResult blur(const Graph& g, const BlurParams& params, std::span<const Vertex> seed_set, const OracleConfig& cfg,
                RandomStream& stream, CallLedger& ledger, CallTag tag = {});

// Number of rounds the loop guard admits: #{i >= 0 : alpha^i rho >= l_min}.
int blur_round_count(const BlurParams& params, double min_edge_length);

// max over v in `set` of dist_g(seed_set, v), exact.
double distance_from_set(const Graph& g, std::span<const Vertex> seed_set, std::span<const Vertex> set);

}  // namespace lowdiam
