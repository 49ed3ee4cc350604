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

#ifndef VJPOLY_OUTERPLANAR_HPP_
#define VJPOLY_OUTERPLANAR_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vjpoly/multigraph.hpp"
#include "vjpoly/poly.hpp"
#include "vjpoly/vjtree.hpp"

namespace vjpoly {

// Unordered vertex pair stored as (min, max).
using VertexPair = std::pair<VertexId, VertexId>;

inline VertexPair make_pair_key(VertexId a, VertexId b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// Hamiltonian outer cycle of a biconnected outerplanar multigraph.
struct OuterCycle {
  // Cyclic order of all vertices, starting at vertex 0.
  std::vector<VertexId> order;
  // Simple edges that are not on the cycle; pairwise non-crossing.
  std::vector<VertexPair> chords;
  // Multiplicity of every simple edge in the original graph.
  std::map<VertexPair, std::size_t> parallel_count;
  std::size_t loop_count = 0;

  std::size_t multiplicity(VertexId a, VertexId b) const {
    return parallel_count.at(make_pair_key(a, b));
  }
};

// Finds the outer cycle by repeated elimination of degree-2 vertices and
// certifies it: the cycle must use real edges and the chords must not cross.
//
// Loops are stripped and parallel bundles collapsed first. Two vertices
// joined by at least two parallel edges form a degenerate cycle.
//
// Throws Error(kNotBiconnected) for disconnected inputs, cut vertices or
// bridges, and Error(kNotOuterplanar) when no certificate exists.
OuterCycle find_outer_cycle(const MultiGraph& g);

// A bounded face of the simple graph underlying an OuterCycle.
struct OuterFace {
  // Cycle edges on the boundary.
  std::vector<VertexPair> outer_edges;
  // Chords on the boundary, including `closing`.
  std::vector<VertexPair> chord_edges;
  // Face across the closing chord; nullopt for the face that owns the
  // closing cycle edge (order.back(), order.front()).
  std::optional<std::size_t> parent;
  std::optional<VertexPair> closing;

  std::size_t size() const { return outer_edges.size() + chord_edges.size(); }
};

// Bounded faces of the polygon with its chords, found by one stack sweep
// along the cyclic order. Face 0 owns the closing cycle edge. Throws
// Error(kNotOuterplanar) if two chords cross. Requires order.size() >= 3.
std::vector<OuterFace> outer_faces(const OuterCycle& oc);

struct DualTree {
  VertexJoinTree tree;
  // Loops stripped from the primal graph.
  std::size_t loop_count = 0;
};

// Dual of the outer cycle's graph as a generalized vertex join tree: one tree
// vertex per bounded face, the apex standing for the outer face. A bundle of
// k parallel copies becomes a dual path with k-1 inner vertices.
DualTree build_dual(const OuterCycle& oc);

// Flow polynomial of an outerplanar multigraph. Zero if there is a bridge;
// otherwise the product over biconnected blocks of P(dual)/t, times (t-1)
// per loop.
IntPoly flow_outerplanar(const MultiGraph& g);

// Chromatic polynomial of an outerplanar multigraph from its face sizes:
// each block contributes prod P(C_face) / (t(t-1))^chords.
IntPoly chromatic_outerplanar(const MultiGraph& g);

}  // namespace vjpoly

#endif  // VJPOLY_OUTERPLANAR_HPP_
