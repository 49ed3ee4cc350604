// Copyright 2026 The vjpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VJPOLY_VJTREE_HPP_
#define VJPOLY_VJTREE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vjpoly/multigraph.hpp"
#include "vjpoly/poly.hpp"

namespace vjpoly {

using TreeEdge = std::pair<VertexId, VertexId>;

// A tree on vertices 0..n-1 plus an implicit apex joined to vertex x by
// multiplicity(x) parallel edges.
class VertexJoinTree {
 public:
  // Throws Error(kInvalidTree) unless n >= 1 and tree_edges is a spanning
  // tree of 0..n-1, and when `multiplicity` is neither empty (all zero) nor
  // of length n.
  VertexJoinTree(std::size_t n, std::vector<TreeEdge> tree_edges,
                 std::vector<std::size_t> multiplicity = {});

  std::size_t vertex_count() const { return n_; }
  const std::vector<TreeEdge>& tree_edges() const { return tree_edges_; }
  const std::vector<std::size_t>& multiplicities() const { return mult_; }
  std::size_t multiplicity(VertexId v) const { return mult_[v]; }
  bool joined(VertexId v) const { return mult_[v] > 0; }
  // Number of distinct joined vertices.
  std::size_t join_count() const;
  // Tree adjacency, each list ascending.
  const std::vector<std::vector<VertexId>>& neighbors() const { return adj_; }

  // The apex is vertex n. Tree edges come first, in order, then the apex
  // edges grouped by tree vertex.
  MultiGraph realize() const;

 private:
  std::size_t n_;
  std::vector<TreeEdge> tree_edges_;
  std::vector<std::size_t> mult_;
  std::vector<std::vector<VertexId>> adj_;
};

// Clamps every multiplicity to at most 1. Parallel apex edges do not change
// the chromatic polynomial.
VertexJoinTree reduce_multiplicities(const VertexJoinTree& tree);

// Closed forms for fewer than two joined vertices: t^2 (t-1)^(n-1) when
// nothing is joined and t (t-1)^n for a single joined vertex. std::nullopt
// otherwise. Expects reduced multiplicities.
std::optional<IntPoly> chromatic_small_s(const VertexJoinTree& tree);

// Result of removing every vertex that hangs off all cycles of the join.
struct BridgeReduction {
  std::size_t bridge_count = 0;
  // Removed tree vertices (original ids, ascending).
  std::vector<VertexId> removed;
  // The remaining tree renumbered in ascending original-id order.
  VertexJoinTree core;
  // core vertex -> original vertex
  std::vector<VertexId> core_to_original;
};

// Requires at least two joined vertices. P(tree) = P(core) (t-1)^b.
BridgeReduction strip_bridges(const VertexJoinTree& tree);

// Per-vertex sweep state: chromatic polynomials of the subtree-plus-apex
// graph T_a and of T_a with a identified with the apex.
struct NodeState {
  IntPoly subtree;
  IntPoly merged;
};

struct LeveledTree {
  VertexId root = 0;
  std::vector<std::size_t> level;
  std::vector<VertexId> parent;  // parent[root] == root
  std::vector<std::vector<VertexId>> children;
  std::vector<std::vector<VertexId>> by_level;
  std::vector<std::optional<NodeState>> state;

  std::size_t depth() const { return by_level.size() - 1; }
};

// BFS levels from the root. Without an override the root is the smallest
// joined vertex (vertex 0 if nothing is joined).
LeveledTree build_leveled(const VertexJoinTree& core,
                          std::optional<VertexId> root = std::nullopt);

struct SweepOptions {
  // Keep every vertex's NodeState after the sweep. When false, a child's
  // state is released once its parent has consumed it, which is what keeps
  // memory quadratic on large inputs.
  bool retain_states = true;
};

// Runs the level-by-level dynamic program from the deepest level up and
// returns the chromatic polynomial of the core join tree.
IntPoly sweep(LeveledTree& lt, const VertexJoinTree& core,
              SweepOptions options = {});

// The same recurrences as sweep, grouped along heavy paths. On a path
// each vertex's (subtree, merged) pair is a linear image of its heavy
// child's pair, so the path collapses to a balanced product of 2x2
// polynomial matrices. Only path heads keep a state, and the big
// multiplications happen between operands of similar size. lt.state is
// left untouched.
IntPoly sweep_heavy_paths(const LeveledTree& lt, const VertexJoinTree& core);

// Full pipeline: reduce multiplicities, closed forms for small joins,
// bridge stripping, heavy-path sweep, bridge factor.
IntPoly chromatic_vjtree(const VertexJoinTree& tree);

}  // namespace vjpoly

#endif  // VJPOLY_VJTREE_HPP_
