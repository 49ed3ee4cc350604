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

#include "vjpoly/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vjpoly/errors.hpp"

namespace vjpoly {

namespace {

constexpr std::size_t kMaxBitsetVertices = 64;
constexpr unsigned long long kEnumerationLimit = 100'000'000ULL;

// Simple graph on at most 64 vertices. Vertices leave `alive` when they are
// contracted away; ids are never reused.
struct BitGraph {
  std::uint64_t alive = 0;
  std::array<std::uint64_t, kMaxBitsetVertices> adj{};
};

class ChromaticRecursion {
 public:
  explicit ChromaticRecursion(bool memoize) : memoize_(memoize) {}

  IntPoly run(const BitGraph& g) {
    if (!memoize_) return solve(g);
    std::vector<std::uint64_t> key{g.alive};
    for (std::uint64_t rest = g.alive; rest != 0; rest &= rest - 1) {
      key.push_back(g.adj[std::countr_zero(rest)]);
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    IntPoly p = solve(g);
    memo_.emplace(std::move(key), p);
    return p;
  }

 private:
  static std::uint64_t component_of(const BitGraph& g, int start) {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        next |= g.adj[std::countr_zero(f)];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  IntPoly solve(const BitGraph& g) {
    // Split into components first (product rule for disjoint unions).
    const std::uint64_t first = component_of(g, std::countr_zero(g.alive));
    if (first != g.alive) {
      BitGraph a = g;
      BitGraph b = g;
      a.alive = first;
      b.alive = g.alive & ~first;
      return mul(run(a), run(b));
    }

    int u = -1;
    for (std::uint64_t rest = g.alive; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      if (g.adj[x] != 0) {
        u = x;
        break;
      }
    }
    if (u < 0) {
      return IntPoly::monomial(1, static_cast<std::size_t>(std::popcount(g.alive)));
    }
    const int v = std::countr_zero(g.adj[u]);
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;

    BitGraph deleted = g;
    deleted.adj[u] &= ~bv;
    deleted.adj[v] &= ~bu;

    // Merge v into u; the u-v edge disappears and parallels collapse.
    BitGraph contracted = g;
    contracted.alive &= ~bv;
    const std::uint64_t merged = (g.adj[u] | g.adj[v]) & ~(bu | bv);
    contracted.adj[u] = merged;
    contracted.adj[v] = 0;
    for (std::uint64_t w = g.adj[v] & ~bu; w != 0; w &= w - 1) {
      const int x = std::countr_zero(w);
      contracted.adj[x] = (contracted.adj[x] & ~bv) | bu;
    }

    IntPoly out = run(deleted);
    out -= run(contracted);
    return out;
  }

  bool memoize_;
  std::map<std::vector<std::uint64_t>, IntPoly> memo_;
};

class FlowRecursion {
 public:
  explicit FlowRecursion(bool memoize) : memoize_(memoize) {}

  IntPoly run(const MultiGraph& g) {
    if (!memoize_) return solve(g);
    std::vector<std::pair<VertexId, VertexId>> key;
    key.reserve(g.edge_count());
    for (const Edge& e : g.edges()) key.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(key.begin(), key.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    IntPoly p = solve(g);
    memo_.emplace(std::move(key), p);
    return p;
  }

 private:
  IntPoly solve(const MultiGraph& g) {
    if (!bridges(g).empty()) return {};

    std::vector<Edge> kept;
    std::size_t loops = 0;
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) {
        ++loops;
      } else {
        kept.push_back(e);
      }
    }
    if (loops > 0) {
      const IntPoly rest = run(MultiGraph(g.vertex_count(), std::move(kept)));
      return mul(pow(IntPoly::t_minus(1), loops), rest);
    }
    if (kept.empty()) return IntPoly{1};

    // Pivot on edge 0. Unlike the chromatic contraction, the other u-v
    // copies survive as loops.
    const Edge pivot = kept.front();
    const VertexId keep = std::min(pivot.u, pivot.v);
    const VertexId gone = std::max(pivot.u, pivot.v);
    auto relabel = [&](VertexId x) -> VertexId {
      if (x == gone) return keep;
      return x > gone ? x - 1 : x;
    };
    std::vector<Edge> contracted_edges;
    for (std::size_t i = 1; i < kept.size(); ++i) {
      contracted_edges.push_back({relabel(kept[i].u), relabel(kept[i].v)});
    }
    const MultiGraph contracted(g.vertex_count() - 1, std::move(contracted_edges));

    IntPoly out = run(contracted);
    out -= run(delete_edge(g, 0));
    return out;
  }

  bool memoize_;
  std::map<std::vector<std::pair<VertexId, VertexId>>, IntPoly> memo_;
};

bool enumeration_fits(unsigned long long base, std::size_t exponent) {
  unsigned long long total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && total > kEnumerationLimit / base) return false;
    total *= base;
  }
  return total <= kEnumerationLimit;
}

}  // namespace

IntPoly oracle_chromatic(const MultiGraph& g, const OracleOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n > options.max_vertices || n > kMaxBitsetVertices) {
    throw Error(ErrorCode::kTooLarge,
                "chromatic oracle limited to " +
                    std::to_string(std::min(options.max_vertices, kMaxBitsetVertices)) +
                    " vertices, got " + std::to_string(n));
  }
  if (n == 0) return IntPoly{1};
  BitGraph bg;
  bg.alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return {};
    bg.adj[e.u] |= std::uint64_t{1} << e.v;
    bg.adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return ChromaticRecursion(options.memoize).run(bg);
}

IntPoly oracle_flow(const MultiGraph& g, const OracleOptions& options) {
  if (g.edge_count() > options.max_edges) {
    throw Error(ErrorCode::kTooLarge,
                "flow oracle limited to " + std::to_string(options.max_edges) +
                    " edges, got " + std::to_string(g.edge_count()));
  }
  return FlowRecursion(options.memoize).run(g);
}

Integer count_colorings(const MultiGraph& g, unsigned long t) {
  const std::size_t n = g.vertex_count();
  if (!enumeration_fits(t, n)) {
    throw Error(ErrorCode::kTooLarge, "t^|V| exceeds the enumeration limit");
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return 0;
  }
  if (n == 0) return 1;
  if (t == 0) return 0;
  std::vector<unsigned long> color(n, 0);
  Integer count = 0;
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges()) {
      if (color[e.u] == color[e.v]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    std::size_t i = 0;
    while (i < n && ++color[i] == t) color[i++] = 0;
    if (i == n) break;
  }
  return count;
}

Integer count_flows(const MultiGraph& g, unsigned long t) {
  if (t == 0 || !enumeration_fits(t - 1, g.edge_count())) {
    throw Error(ErrorCode::kTooLarge, "(t-1)^|E| exceeds the enumeration limit");
  }
  std::vector<Edge> arcs;
  std::size_t loops = 0;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      ++loops;
    } else {
      arcs.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
  }
  Integer loop_factor = 1;
  for (std::size_t i = 0; i < loops; ++i) loop_factor *= static_cast<long>(t) - 1;
  if (arcs.empty()) return loop_factor;
  if (t == 1) return 0;

  const std::size_t n = g.vertex_count();
  const long mod = static_cast<long>(t);
  std::vector<long> value(arcs.size(), 1);
  // net[x] = inflow - outflow, kept in [0, t)
  std::vector<long> net(n, 0);
  auto shift = [&](const Edge& a, long delta) {
    net[a.u] = ((net[a.u] - delta) % mod + mod) % mod;
    net[a.v] = ((net[a.v] + delta) % mod + mod) % mod;
  };
  for (const Edge& a : arcs) shift(a, 1);

  Integer count = 0;
  while (true) {
    if (std::all_of(net.begin(), net.end(), [](long x) { return x == 0; })) ++count;
    std::size_t i = 0;
    while (i < arcs.size()) {
      if (value[i] + 1 < mod) {
        ++value[i];
        shift(arcs[i], 1);
        break;
      }
      shift(arcs[i], 1 - value[i]);
      value[i] = 1;
      ++i;
    }
    if (i == arcs.size()) break;
  }
  return count * loop_factor;
}

}  // namespace vjpoly
