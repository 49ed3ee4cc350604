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

#include "vjpoly/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "vjpoly/errors.hpp"

namespace vjpoly {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

struct LowLinkResult {
  std::vector<EdgeId> bridges;
  std::vector<std::vector<EdgeId>> blocks;
};

// Iterative Tarjan low-link pass. The tree edge back to the parent is
// skipped by id, so a parallel copy of it counts as a back edge.
LowLinkResult low_link(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto adj = g.incidence();
  std::vector<std::size_t> disc(n, kUnset);
  std::vector<std::size_t> low(n, 0);
  std::size_t timer = 0;

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::vector<EdgeId> edge_stack;
  LowLinkResult out;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnset) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, kUnset, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const VertexId v = f.v;
      if (f.next < adj[v].size()) {
        const auto [w, e] = adj[v][f.next++];
        if (e == f.parent_edge || w == v) continue;
        if (disc[w] == kUnset) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[v]) {
          low[v] = std::min(low[v], disc[w]);
          edge_stack.push_back(e);
        }
        continue;
      }
      const EdgeId pe = f.parent_edge;
      stack.pop_back();
      if (stack.empty()) break;
      const VertexId p = stack.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] > disc[p]) out.bridges.push_back(pe);
      if (low[v] >= disc[p]) {
        std::vector<EdgeId> block;
        while (true) {
          const EdgeId top = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(top);
          if (top == pe) break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

}  // namespace

MultiGraph::MultiGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw Error(ErrorCode::kInvalidVertex,
                  "edge endpoint out of range (" + std::to_string(e.u) + ", " +
                      std::to_string(e.v) + ") with n = " + std::to_string(n_));
    }
  }
}

std::size_t MultiGraph::degree(VertexId v) const {
  std::size_t d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

std::vector<std::vector<MultiGraph::Incidence>> MultiGraph::incidence() const {
  std::vector<std::vector<Incidence>> adj(n_);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adj[e.u].push_back({e.v, id});
    adj[e.v].push_back({e.u, id});
  }
  return adj;
}

std::vector<EdgeId> bridges(const MultiGraph& g) { return low_link(g).bridges; }

std::vector<std::vector<EdgeId>> blocks(const MultiGraph& g) {
  auto out = low_link(g).blocks;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> components(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto adj = g.incidence();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& inc : adj[queue[head]]) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          queue.push_back(inc.neighbor);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

MultiGraph contract(const MultiGraph& g, VertexId u, VertexId v) {
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) {
    throw Error(ErrorCode::kInvalidVertex, "contract: vertex out of range");
  }
  if (u == v) throw Error(ErrorCode::kSelfContract, "contract: u == v");
  const VertexId keep = std::min(u, v);
  const VertexId gone = std::max(u, v);
  auto relabel = [&](VertexId x) -> VertexId {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const bool between = (e.u == u && e.v == v) || (e.u == v && e.v == u);
    if (between) continue;
    edges.push_back({relabel(e.u), relabel(e.v)});
  }
  return MultiGraph(n - 1, std::move(edges));
}

MultiGraph delete_edge(const MultiGraph& g, EdgeId e) {
  if (e >= g.edge_count()) {
    throw Error(ErrorCode::kInvalidEdge,
                "delete_edge: no edge with id " + std::to_string(e));
  }
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return MultiGraph(g.vertex_count(), std::move(edges));
}

MultiGraph edge_subgraph(const MultiGraph& g, const std::vector<EdgeId>& ids,
                         std::vector<VertexId>* vertex_map) {
  std::vector<VertexId> verts;
  for (EdgeId id : ids) {
    verts.push_back(g.edge(id).u);
    verts.push_back(g.edge(id).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto index_of = [&](VertexId x) {
    return static_cast<VertexId>(
        std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (EdgeId id : ids) {
    edges.push_back({index_of(g.edge(id).u), index_of(g.edge(id).v)});
  }
  if (vertex_map != nullptr) *vertex_map = verts;
  return MultiGraph(verts.size(), std::move(edges));
}

MultiGraph induced_subgraph(const MultiGraph& g,
                            const std::vector<VertexId>& vertices) {
  std::vector<std::size_t> pos(g.vertex_count(), kUnset);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (pos[e.u] != kUnset && pos[e.v] != kUnset) {
      edges.push_back({pos[e.u], pos[e.v]});
    }
  }
  return MultiGraph(vertices.size(), std::move(edges));
}

}  // namespace vjpoly
