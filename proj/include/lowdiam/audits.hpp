#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lowdiam/blur.hpp"
#include "lowdiam/decompose.hpp"
#include "lowdiam/embed.hpp"
#include "lowdiam/graph.hpp"
#include "lowdiam/htsd.hpp"

namespace lowdiam {

// Each audit returns human-readable violations; empty means the run is clean.
using Violations = std::vector<std::string>;

// Superset, monotone trace and dist(b, v) <= rho / (1 - alpha) for v in U.
Violations audit_blur(const Graph& g, const BlurParams& params, std::span<const Vertex> seed_set,
                      const BlurResult& result);

// Once an edge is safe after some round it must not be cut by U.
Violations audit_blur_safety(const Graph& g, const BlurParams& params, const BlurResult& result);

// Supporting-tree validity: edges exist in g with equal lengths and form a
// tree on `tree.vertices` that contains the root.
Violations audit_supporting_tree(const Graph& g, const SupportingTree& tree);

// Partition, containment, tree validity, recomputed cut set and loads,
// long-edge deletion and the per-iteration load cap.
Violations audit_tsd(const Graph& g, const DecomposeParams& params, const Tsd& tsd);

// Largest supporting-tree diameter of a decomposition.
double max_tree_diameter(const Tsd& tsd);
double max_tree_depth(const Tsd& tsd);

// Halving sequence, depth bound, per-level partition and tree validity,
// nesting, singleton bottom, decoupling consistency and load additivity.
// With `exact_diameter` the estimate is also checked against diam / 4 and diam.
Violations audit_htsd(const Graph& g, const Htsd& h, std::optional<double> exact_diameter = std::nullopt);

// True when every level-i supporting tree has diameter at most d_i.
bool htsd_diameters_hold(const Htsd& h);

// Tree-ness, projection validity, embedding, load equality, the 4 d_i cap per
// edge and, when `check_domination`, domination over all pairs.
Violations audit_projected_tree(const Graph& g, const Htsd& h, const ProjectedTree& t, bool check_domination);

// 2-separation, balanced leaves, closed-form ancestor distances and leaders;
// domination when `check_domination`.
Violations audit_hst(const Graph& g, const Htsd& h, const Hst& t, bool check_domination);

}  // namespace lowdiam
