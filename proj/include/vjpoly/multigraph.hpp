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

#ifndef VJPOLY_MULTIGRAPH_HPP_
#define VJPOLY_MULTIGRAPH_HPP_

#include <cstddef>
#include <utility>
#include <vector>

namespace vjpoly {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
// allowed; an edge's id is its position in edges(), so parallel copies stay
// distinguishable.
class MultiGraph {
 public:
  struct Incidence {
    VertexId neighbor;
    EdgeId edge;
  };

  MultiGraph() = default;
  // Throws Error(kInvalidVertex) if an endpoint is >= n.
  MultiGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  // A loop contributes 2 to the degree of its vertex.
  std::size_t degree(VertexId v) const;

  // Incidence lists; a loop appears twice in its vertex's list.
  std::vector<std::vector<Incidence>> incidence() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Ids of the edges whose removal disconnects their component, ascending.
// Loops and members of a parallel bundle are never bridges.
std::vector<EdgeId> bridges(const MultiGraph& g);

// Vertex sets of the connected components, each sorted, ordered by their
// smallest vertex.
std::vector<std::vector<VertexId>> components(const MultiGraph& g);

// Biconnected blocks as sets of non-loop edge ids (ascending inside each
// block). Loops belong to no block. A bridge forms a block on its own.
std::vector<std::vector<EdgeId>> blocks(const MultiGraph& g);

// Identifies u and v and drops every edge between them. The merged vertex
// takes id min(u, v); ids above max(u, v) shift down by one. Remaining edges
// keep their relative order.
MultiGraph contract(const MultiGraph& g, VertexId u, VertexId v);

// Removes the single edge copy e; the vertex set is unchanged.
MultiGraph delete_edge(const MultiGraph& g, EdgeId e);

// Subgraph made of the given edges over their endpoints, renumbered in
// ascending original-id order. `vertex_map` (optional) receives the original
// id of each new vertex.
MultiGraph edge_subgraph(const MultiGraph& g, const std::vector<EdgeId>& ids,
                         std::vector<VertexId>* vertex_map = nullptr);

// Subgraph induced by `vertices` (renumbered by position in that list).
MultiGraph induced_subgraph(const MultiGraph& g,
                            const std::vector<VertexId>& vertices);

}  // namespace vjpoly

#endif  // VJPOLY_MULTIGRAPH_HPP_
