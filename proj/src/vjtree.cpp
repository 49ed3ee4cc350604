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

#include "vjpoly/vjtree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vjpoly/errors.hpp"

namespace vjpoly {

namespace {

// Union-find just large enough to validate the tree.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

VertexJoinTree::VertexJoinTree(std::size_t n, std::vector<TreeEdge> tree_edges,
                               std::vector<std::size_t> multiplicity)
    : n_(n), tree_edges_(std::move(tree_edges)), mult_(std::move(multiplicity)) {
  if (n_ == 0) throw Error(ErrorCode::kInvalidTree, "tree needs n >= 1");
  if (mult_.empty()) mult_.assign(n_, 0);
  if (mult_.size() != n_) {
    throw Error(ErrorCode::kInvalidTree,
                "multiplicity vector length differs from n");
  }
  if (tree_edges_.size() != n_ - 1) {
    throw Error(ErrorCode::kInvalidTree,
                "expected " + std::to_string(n_ - 1) + " tree edges, got " +
                    std::to_string(tree_edges_.size()));
  }
  DisjointSets sets(n_);
  adj_.assign(n_, {});
  for (const auto& [u, v] : tree_edges_) {
    if (u >= n_ || v >= n_) {
      throw Error(ErrorCode::kInvalidTree, "tree edge endpoint out of range");
    }
    if (!sets.unite(u, v)) {
      throw Error(ErrorCode::kInvalidTree,
                  "tree edges contain a cycle through (" + std::to_string(u) +
                      ", " + std::to_string(v) + ")");
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::size_t VertexJoinTree::join_count() const {
  return static_cast<std::size_t>(
      std::count_if(mult_.begin(), mult_.end(), [](auto m) { return m > 0; }));
}

MultiGraph VertexJoinTree::realize() const {
  std::vector<Edge> edges;
  for (const auto& [u, v] : tree_edges_) edges.push_back({u, v});
  for (VertexId x = 0; x < n_; ++x) {
    for (std::size_t k = 0; k < mult_[x]; ++k) edges.push_back({x, n_});
  }
  return MultiGraph(n_ + 1, std::move(edges));
}

VertexJoinTree reduce_multiplicities(const VertexJoinTree& tree) {
  std::vector<std::size_t> mult = tree.multiplicities();
  for (auto& m : mult) m = std::min<std::size_t>(m, 1);
  return VertexJoinTree(tree.vertex_count(), tree.tree_edges(), std::move(mult));
}

std::optional<IntPoly> chromatic_small_s(const VertexJoinTree& tree) {
  const std::size_t n = tree.vertex_count();
  const IntPoly t_minus_one = IntPoly::t_minus(1);
  switch (tree.join_count()) {
    case 0:
      return pow(t_minus_one, n - 1).shifted(2);
    case 1:
      return pow(t_minus_one, n).shifted(1);
    default:
      return std::nullopt;
  }
}

BridgeReduction strip_bridges(const VertexJoinTree& tree) {
  const std::size_t n = tree.vertex_count();
  const MultiGraph g = tree.realize();
  const std::vector<EdgeId> bridge_ids = bridges(g);

  std::vector<bool> is_bridge(g.edge_count(), false);
  for (EdgeId e : bridge_ids) is_bridge[e] = true;

  // A tree vertex lies on a cycle iff one of its incident edges does.
  std::vector<bool> on_cycle(n, false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_bridge[e]) continue;
    const Edge& edge = g.edge(e);
    if (edge.u < n) on_cycle[edge.u] = true;
    if (edge.v < n) on_cycle[edge.v] = true;
  }

  std::vector<VertexId> removed;
  std::vector<VertexId> kept;
  std::vector<VertexId> new_id(n, 0);
  for (VertexId x = 0; x < n; ++x) {
    if (on_cycle[x]) {
      new_id[x] = kept.size();
      kept.push_back(x);
    } else {
      removed.push_back(x);
    }
  }

  std::vector<TreeEdge> core_edges;
  for (const auto& [u, v] : tree.tree_edges()) {
    if (on_cycle[u] && on_cycle[v]) core_edges.emplace_back(new_id[u], new_id[v]);
  }
  std::vector<std::size_t> core_mult;
  core_mult.reserve(kept.size());
  for (VertexId x : kept) core_mult.push_back(tree.multiplicity(x));

  return BridgeReduction{
      .bridge_count = bridge_ids.size(),
      .removed = std::move(removed),
      .core = VertexJoinTree(kept.size(), std::move(core_edges),
                             std::move(core_mult)),
      .core_to_original = std::move(kept),
  };
}

LeveledTree build_leveled(const VertexJoinTree& core,
                          std::optional<VertexId> root) {
  const std::size_t n = core.vertex_count();
  LeveledTree lt;
  if (root.has_value()) {
    if (*root >= n) {
      throw Error(ErrorCode::kInvalidVertex, "root override out of range");
    }
    lt.root = *root;
  } else {
    const auto& mult = core.multiplicities();
    auto it = std::find_if(mult.begin(), mult.end(), [](auto m) { return m > 0; });
    lt.root = it == mult.end() ? 0 : static_cast<VertexId>(it - mult.begin());
  }

  lt.level.assign(n, 0);
  lt.parent.assign(n, lt.root);
  lt.children.assign(n, {});
  lt.state.assign(n, std::nullopt);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> order{lt.root};
  seen[lt.root] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    for (VertexId w : core.neighbors()[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      lt.parent[w] = v;
      lt.level[w] = lt.level[v] + 1;
      lt.children[v].push_back(w);
      order.push_back(w);
    }
  }
  lt.by_level.assign(lt.level[order.back()] + 1, {});
  for (VertexId v : order) lt.by_level[lt.level[v]].push_back(v);
  return lt;
}

namespace {

// prod(factors) / prod_{r in roots}(t - r)^(k-1) for k factors. Every
// factor except the longest takes one copy of the divisor, so the longest
// never goes through a division; whatever cannot be taken that way is
// divided out of the product at the end.
IntPoly glued_product(std::vector<IntPoly> factors, const std::vector<long>& roots) {
  IntPoly unit{1};
  for (long r : roots) unit = mul(unit, IntPoly::t_minus(r));
  std::sort(factors.begin(), factors.end(),
            [](const IntPoly& a, const IntPoly& b) { return a.size() < b.size(); });
  std::size_t owed = factors.size() - 1;
  for (std::size_t i = 0; i + 1 < factors.size() && owed > 0; ++i) {
    const bool divisible = std::all_of(roots.begin(), roots.end(), [&](long r) {
      return sgn(eval(factors[i], Integer(r))) == 0;
    });
    if (!divisible) continue;
    factors[i] = exact_div(factors[i], unit);
    --owed;
  }
  IntPoly out = product(std::move(factors));
  if (owed > 0) out = exact_div(out, pow(unit, owed));
  return out;
}

}  // namespace

IntPoly sweep(LeveledTree& lt, const VertexJoinTree& core, SweepOptions options) {
  const IntPoly t = IntPoly::monomial(1, 1);
  const IntPoly t_minus_two = IntPoly::t_minus(2);
  const IntPoly edge_poly{0, -1, 1};  // t(t-1)

  for (std::size_t lvl = lt.by_level.size(); lvl-- > 0;) {
    for (VertexId a : lt.by_level[lvl]) {
      const auto& kids = lt.children[a];
      IntPoly merged;
      IntPoly joined_poly;  // P(T_a) if a were joined to the apex
      if (kids.empty()) {
        merged = t;
        joined_poly = edge_poly;
      } else {
        std::vector<IntPoly> merged_factors;
        std::vector<IntPoly> joined_factors;
        merged_factors.reserve(kids.size());
        joined_factors.reserve(kids.size());
        for (VertexId c : kids) {
          const NodeState& s = *lt.state[c];
          IntPoly scaled = mul(s.subtree, t_minus_two);
          if (core.joined(c)) {
            merged_factors.push_back(s.subtree);
            joined_factors.push_back(std::move(scaled));
          } else {
            merged_factors.push_back(sub(s.subtree, s.merged));
            joined_factors.push_back(add(scaled, s.merged));
          }
          if (!options.retain_states) lt.state[c].reset();
        }
        merged = glued_product(std::move(merged_factors), {0});
        joined_poly = glued_product(std::move(joined_factors), {0, 1});
      }
      IntPoly subtree =
          core.joined(a) ? std::move(joined_poly) : add(joined_poly, merged);
      lt.state[a] = NodeState{std::move(subtree), std::move(merged)};
    }
  }
  return lt.state[lt.root]->subtree;
}

namespace {

// Maps a heavy child's (subtree, merged) pair to its parent's.
struct Transfer {
  IntPoly a, b;  // subtree = a * child.subtree + b * child.merged
  IntPoly c, d;  // merged  = c * child.subtree + d * child.merged
};

Transfer compose(const Transfer& x, const Transfer& y) {
  return Transfer{
      add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
      add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

// With `subtree_only` the merged half is left empty.
NodeState apply(const Transfer& m, const NodeState& s, bool subtree_only = false) {
  IntPoly subtree = add(mul(m.a, s.subtree), mul(m.b, s.merged));
  if (subtree_only) return NodeState{std::move(subtree), {}};
  return NodeState{std::move(subtree), add(mul(m.c, s.subtree), mul(m.d, s.merged))};
}

// path[lo] * ... * path[hi - 1]
Transfer compose_range(const std::vector<Transfer>& path, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return path[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return compose(compose_range(path, lo, mid), compose_range(path, mid, hi));
}

// path[lo] * ... * path[hi - 1] applied to s. The lower half acts on the
// vector first, which saves the full matrix product at every split.
NodeState apply_range(const std::vector<Transfer>& path, std::size_t lo, std::size_t hi,
                      NodeState s, bool subtree_only) {
  if (hi - lo == 1) return apply(path[lo], s, subtree_only);
  const std::size_t mid = lo + (hi - lo) / 2;
  return apply(compose_range(path, lo, mid), apply_range(path, mid, hi, std::move(s), false),
               subtree_only);
}

}  // namespace

IntPoly sweep_heavy_paths(const LeveledTree& lt, const VertexJoinTree& core) {
  const std::size_t n = core.vertex_count();
  const IntPoly t = IntPoly::monomial(1, 1);
  const IntPoly t_minus_two = IntPoly::t_minus(2);
  const IntPoly edge_poly{0, -1, 1};

  std::vector<std::size_t> size(n, 1);
  std::vector<std::optional<VertexId>> heavy(n);
  for (std::size_t lvl = lt.by_level.size(); lvl-- > 0;) {
    for (VertexId a : lt.by_level[lvl]) {
      for (VertexId c : lt.children[a]) {
        size[a] += size[c];
        if (!heavy[a] || size[c] > size[*heavy[a]]) heavy[a] = c;
      }
    }
  }

  // States of path heads whose parent has not consumed them yet.
  std::vector<std::optional<NodeState>> head_state(n);
  for (std::size_t lvl = lt.by_level.size(); lvl-- > 0;) {
    for (VertexId h : lt.by_level[lvl]) {
      if (h != lt.root && heavy[lt.parent[h]] == h) continue;  // not a head
      std::vector<Transfer> path;
      VertexId a = h;
      for (; heavy[a]; a = *heavy[a]) {
        // Light children contribute fixed factors, each already divided by
        // its share of the glue term.
        std::vector<IntPoly> h_factors;
        std::vector<IntPoly> j_factors;
        for (VertexId c : lt.children[a]) {
          if (c == *heavy[a]) continue;
          NodeState s = *std::move(head_state[c]);
          head_state[c].reset();
          if (core.joined(c)) {
            h_factors.push_back(exact_div(s.subtree, t));
            j_factors.push_back(mul(exact_div(s.subtree, edge_poly), t_minus_two));
          } else {
            h_factors.push_back(exact_div(sub(s.subtree, s.merged), t));
            j_factors.push_back(
                exact_div(add(mul(s.subtree, t_minus_two), s.merged), edge_poly));
          }
        }
        const IntPoly lh = product(std::move(h_factors));
        const IntPoly lj = product(std::move(j_factors));
        const bool heavy_joined = core.joined(*heavy[a]);
        Transfer m;
        m.c = lh;
        m.d = heavy_joined ? IntPoly{} : -lh;
        m.a = mul(lj, t_minus_two);
        m.b = heavy_joined ? IntPoly{} : lj;
        if (!core.joined(a)) {
          m.a += m.c;
          m.b += m.d;
        }
        path.push_back(std::move(m));
      }
      // a is the leaf at the bottom of the path.
      NodeState leaf{core.joined(a) ? edge_poly : IntPoly::monomial(1, 2), t};
      if (path.empty()) {
        head_state[h] = std::move(leaf);
        continue;
      }
      head_state[h] = apply_range(path, 0, path.size(), std::move(leaf), h == lt.root);
    }
  }
  return head_state[lt.root]->subtree;
}

IntPoly chromatic_vjtree(const VertexJoinTree& tree) {
  const VertexJoinTree reduced = reduce_multiplicities(tree);
  if (auto closed = chromatic_small_s(reduced)) return *std::move(closed);
  BridgeReduction reduction = strip_bridges(reduced);
  const LeveledTree lt = build_leveled(reduction.core);
  IntPoly core_poly = sweep_heavy_paths(lt, reduction.core);
  if (reduction.bridge_count == 0) return core_poly;
  return mul(core_poly, pow(IntPoly::t_minus(1), reduction.bridge_count));
}

}  // namespace vjpoly
