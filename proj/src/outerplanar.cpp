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

#include "vjpoly/outerplanar.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "vjpoly/errors.hpp"

namespace vjpoly {

namespace {

struct Elimination {
  VertexId vertex;
  VertexId a;
  VertexId b;
};

[[noreturn]] void not_outerplanar(const std::string& why) {
  throw Error(ErrorCode::kNotOuterplanar, why);
}

[[noreturn]] void not_biconnected(const std::string& why) {
  throw Error(ErrorCode::kNotBiconnected, why);
}

// Hamiltonian cycle of a simple graph with n >= 3 by degree-2 elimination.
// Returns next[] of the reconstructed cycle.
std::vector<VertexId> eliminate_degree_two(
    std::size_t n, const std::map<VertexPair, std::size_t>& simple_edges) {
  std::vector<std::set<VertexId>> adj(n);
  for (const auto& [key, count] : simple_edges) {
    adj[key.first].insert(key.second);
    adj[key.second].insert(key.first);
  }

  std::vector<bool> removed(n, false);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (adj[v].size() == 2) queue.push_back(v);
  }
  std::vector<Elimination> steps;
  std::size_t remaining = n;
  while (remaining > 3) {
    if (queue.empty()) not_outerplanar("no vertex of degree 2 left to eliminate");
    const VertexId v = queue.back();
    queue.pop_back();
    if (removed[v] || adj[v].size() != 2) continue;
    const VertexId a = *adj[v].begin();
    const VertexId b = *adj[v].rbegin();
    removed[v] = true;
    --remaining;
    adj[a].erase(v);
    adj[b].erase(v);
    adj[v].clear();
    adj[a].insert(b);
    adj[b].insert(a);
    steps.push_back({v, a, b});
    for (VertexId x : {a, b}) {
      if (adj[x].size() < 2) not_outerplanar("elimination left a vertex of degree < 2");
      if (adj[x].size() == 2) queue.push_back(x);
    }
  }

  std::vector<VertexId> last;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) last.push_back(v);
  }
  for (VertexId v : last) {
    if (adj[v].size() != 2) not_outerplanar("elimination did not end in a triangle");
  }

  std::vector<VertexId> next(n, 0);
  std::vector<VertexId> prev(n, 0);
  next[last[0]] = last[1];
  next[last[1]] = last[2];
  next[last[2]] = last[0];
  prev[last[1]] = last[0];
  prev[last[2]] = last[1];
  prev[last[0]] = last[2];
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    VertexId from = it->a;
    VertexId to = it->b;
    if (next[from] != to) std::swap(from, to);
    if (next[from] != to) {
      not_outerplanar("eliminated vertex does not fit back on the cycle");
    }
    next[from] = it->vertex;
    prev[it->vertex] = from;
    next[it->vertex] = to;
    prev[to] = it->vertex;
  }
  return next;
}

}  // namespace

OuterCycle find_outer_cycle(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  OuterCycle oc;
  std::vector<Edge> simple;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      ++oc.loop_count;
      continue;
    }
    if (oc.parallel_count[make_pair_key(e.u, e.v)]++ == 0) simple.push_back(e);
  }

  if (n < 2) not_biconnected("need at least two vertices");
  if (n == 2) {
    if (oc.parallel_count.empty()) not_biconnected("two vertices without an edge");
    if (oc.parallel_count.begin()->second < 2) not_biconnected("single edge is a bridge");
    oc.order = {0, 1};
    return oc;
  }

  const MultiGraph simple_graph(n, simple);
  if (components(simple_graph).size() != 1) not_biconnected("graph is disconnected");
  if (blocks(simple_graph).size() != 1) not_biconnected("graph has a cut vertex");

  const std::vector<VertexId> next = eliminate_degree_two(n, oc.parallel_count);

  // Start at vertex 0 and walk towards its smaller cycle neighbor.
  VertexId prev0 = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (next[v] == 0) prev0 = v;
  }
  const bool forward = next[0] < prev0;
  std::vector<VertexId> back(n, 0);
  for (VertexId v = 0; v < n; ++v) back[next[v]] = v;
  oc.order.reserve(n);
  VertexId cur = 0;
  for (std::size_t i = 0; i < n; ++i) {
    oc.order.push_back(cur);
    cur = forward ? next[cur] : back[cur];
  }

  std::set<VertexPair> cycle_edges;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexPair key = make_pair_key(oc.order[i], oc.order[(i + 1) % n]);
    if (!oc.parallel_count.contains(key)) {
      not_outerplanar("reconstructed cycle uses a missing edge");
    }
    cycle_edges.insert(key);
  }
  for (const auto& [key, count] : oc.parallel_count) {
    if (!cycle_edges.contains(key)) oc.chords.push_back(key);
  }
  outer_faces(oc);  // throws if chords cross
  return oc;
}

std::vector<OuterFace> outer_faces(const OuterCycle& oc) {
  const std::size_t n = oc.order.size();
  if (n < 3) throw Error(ErrorCode::kInvalidSize, "outer_faces needs a polygon");
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < n; ++i) pos[oc.order[i]] = i;

  struct Interval {
    std::size_t lo;
    std::size_t hi;
  };
  std::vector<Interval> chords;
  chords.reserve(oc.chords.size());
  for (const auto& [a, b] : oc.chords) {
    chords.push_back({std::min(pos[a], pos[b]), std::max(pos[a], pos[b])});
  }
  std::sort(chords.begin(), chords.end(), [](const Interval& x, const Interval& y) {
    return x.lo != y.lo ? x.lo < y.lo : x.hi > y.hi;
  });

  std::vector<OuterFace> faces(1);
  struct Open {
    std::size_t face;
    std::size_t hi;
  };
  std::vector<Open> stack{{0, n - 1}};
  std::size_t next_chord = 0;
  for (std::size_t k = 0; k < n; ++k) {
    while (stack.size() > 1 && stack.back().hi == k) stack.pop_back();
    for (; next_chord < chords.size() && chords[next_chord].lo == k; ++next_chord) {
      const Interval c = chords[next_chord];
      if (c.hi > stack.back().hi) not_outerplanar("chords cross");
      const VertexPair key = make_pair_key(oc.order[c.lo], oc.order[c.hi]);
      OuterFace face;
      face.parent = stack.back().face;
      face.closing = key;
      face.chord_edges.push_back(key);
      faces[stack.back().face].chord_edges.push_back(key);
      faces.push_back(std::move(face));
      stack.push_back({faces.size() - 1, c.hi});
    }
    if (k + 1 < n) {
      faces[stack.back().face].outer_edges.push_back(
          make_pair_key(oc.order[k], oc.order[k + 1]));
    }
  }
  faces[0].outer_edges.push_back(make_pair_key(oc.order[n - 1], oc.order[0]));
  return faces;
}

DualTree build_dual(const OuterCycle& oc) {
  std::vector<TreeEdge> edges;
  std::vector<std::size_t> mult;
  auto new_vertex = [&]() {
    mult.push_back(0);
    return mult.size() - 1;
  };
  // Dual path for a bundle of `copies` parallel edges leaving `from`: the
  // innermost copy is shared with `from`, each further copy adds one lens.
  auto chain = [&](VertexId from, std::size_t copies) {
    VertexId prev = from;
    for (std::size_t i = 1; i < copies; ++i) {
      const VertexId w = new_vertex();
      edges.emplace_back(prev, w);
      prev = w;
    }
    return prev;
  };

  if (oc.order.size() == 2) {
    // k parallel edges: k-1 lenses in a row; the two outermost copies face
    // the outer face.
    const std::size_t k = oc.multiplicity(oc.order[0], oc.order[1]);
    const VertexId first = new_vertex();
    const VertexId last = chain(first, k - 1);
    ++mult[first];
    ++mult[last];
  } else {
    const std::vector<OuterFace> faces = outer_faces(oc);
    for (std::size_t f = 0; f < faces.size(); ++f) new_vertex();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      for (const auto& [a, b] : faces[f].outer_edges) {
        ++mult[chain(f, oc.multiplicity(a, b))];
      }
      if (faces[f].parent.has_value()) {
        const auto [a, b] = *faces[f].closing;
        const VertexId end = chain(f, oc.multiplicity(a, b));
        edges.emplace_back(end, *faces[f].parent);
      }
    }
  }
  const std::size_t count = mult.size();
  return DualTree{VertexJoinTree(count, std::move(edges), std::move(mult)),
                  oc.loop_count};
}

IntPoly flow_outerplanar(const MultiGraph& g) {
  const IntPoly t = IntPoly::monomial(1, 1);
  std::size_t loops = 0;
  for (const Edge& e : g.edges()) loops += e.is_loop() ? 1 : 0;

  std::vector<IntPoly> factors;
  for (const auto& block : blocks(g)) {
    if (block.size() == 1) return {};  // a bridge carries no nowhere-zero flow
    const MultiGraph sub = edge_subgraph(g, block);
    const DualTree dual = build_dual(find_outer_cycle(sub));
    factors.push_back(exact_div(chromatic_vjtree(dual.tree), t));
  }
  factors.push_back(pow(IntPoly::t_minus(1), loops));
  return product(std::move(factors));
}

IntPoly chromatic_outerplanar(const MultiGraph& g) {
  const IntPoly t = IntPoly::monomial(1, 1);
  const IntPoly edge_poly{0, -1, 1};
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return {};
  }

  // Connected graph: P = t * prod_blocks P(B)/t; isolated vertices give t.
  std::vector<IntPoly> factors;
  factors.push_back(IntPoly::monomial(1, components(g).size()));
  for (const auto& block : blocks(g)) {
    const MultiGraph sub = edge_subgraph(g, block);
    if (sub.vertex_count() == 2) {
      factors.push_back(IntPoly::t_minus(1));
      continue;
    }
    const OuterCycle oc = find_outer_cycle(sub);
    std::vector<IntPoly> cycles;
    for (const OuterFace& face : outer_faces(oc)) {
      cycles.push_back(chromatic_cycle(static_cast<long>(face.size())));
    }
    IntPoly block_poly = exact_div(product(std::move(cycles)),
                                   pow(edge_poly, oc.chords.size()));
    factors.push_back(exact_div(block_poly, t));
  }
  return product(std::move(factors));
}

}  // namespace vjpoly
