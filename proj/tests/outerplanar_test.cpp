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


#include <gtest/gtest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "vjpoly/errors.hpp"
#include "vjpoly/oracle.hpp"
#include "vjpoly/outerplanar.hpp"

namespace vjpoly {
namespace {

using testing::OuterplanarShape;
using testing::Rng;
using testing::uniform;

const IntPoly kT = IntPoly::monomial(1, 1);

MultiGraph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return MultiGraph(n, e);
}

MultiGraph square_with_diagonal() {
  return MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

MultiGraph wheel4() {
  return MultiGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kParseError;
}

bool is_cyclic_order_of(const std::vector<VertexId>& order, const MultiGraph& g) {
  const std::size_t n = order.size();
  if (n != g.vertex_count()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId a = order[i];
    const VertexId b = order[(i + 1) % n];
    const bool present = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      return make_pair_key(e.u, e.v) == make_pair_key(a, b);
    });
    if (!present) return false;
  }
  return true;
}

TEST(FindOuterCycle, Cycle) {
  const OuterCycle oc = find_outer_cycle(cycle_graph(5));
  EXPECT_EQ(oc.order, (std::vector<VertexId>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(oc.chords.empty());
}

TEST(FindOuterCycle, ScrambledCycle) {
  const MultiGraph g(5, {{3, 1}, {0, 4}, {2, 0}, {1, 4}, {3, 2}});
  const OuterCycle oc = find_outer_cycle(g);
  EXPECT_EQ(oc.order.front(), 0u);
  EXPECT_TRUE(is_cyclic_order_of(oc.order, g));
}

TEST(FindOuterCycle, K4IsRejected) {
  const MultiGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(code_of([&] { find_outer_cycle(k4); }), ErrorCode::kNotOuterplanar);
  EXPECT_EQ(code_of([&] { find_outer_cycle(wheel4()); }), ErrorCode::kNotOuterplanar);
  // K_{2,3} is the other obstruction.
  const MultiGraph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(code_of([&] { find_outer_cycle(k23); }), ErrorCode::kNotOuterplanar);
}

TEST(FindOuterCycle, SquareWithDiagonal) {
  const OuterCycle oc = find_outer_cycle(square_with_diagonal());
  EXPECT_EQ(oc.order, (std::vector<VertexId>{0, 1, 2, 3}));
  ASSERT_EQ(oc.chords.size(), 1u);
  EXPECT_EQ(oc.chords[0], (VertexPair{0, 2}));
}

TEST(FindOuterCycle, RequiresBiconnected) {
  const MultiGraph path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(code_of([&] { find_outer_cycle(path); }), ErrorCode::kNotBiconnected);
  const MultiGraph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  EXPECT_EQ(code_of([&] { find_outer_cycle(bowtie); }), ErrorCode::kNotBiconnected);
  EXPECT_EQ(code_of([&] { find_outer_cycle(MultiGraph(2, {{0, 1}})); }),
            ErrorCode::kNotBiconnected);
  EXPECT_EQ(code_of([&] { find_outer_cycle(MultiGraph(1, {{0, 0}})); }),
            ErrorCode::kNotBiconnected);
}

TEST(FindOuterCycle, RecordsParallelsAndLoops) {
  const MultiGraph g(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 2}});
  const OuterCycle oc = find_outer_cycle(g);
  EXPECT_EQ(oc.multiplicity(1, 0), 2u);
  EXPECT_EQ(oc.multiplicity(1, 2), 1u);
  EXPECT_EQ(oc.loop_count, 1u);
}

TEST(FindOuterCycle, RandomBlocks) {
  Rng rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    const MultiGraph g = testing::random_outerplanar(rng, OuterplanarShape::kBlock);
    const OuterCycle oc = find_outer_cycle(g);
    EXPECT_TRUE(is_cyclic_order_of(oc.order, g));
    std::size_t simple = 0;
    for (const auto& [pair, count] : oc.parallel_count) simple += count > 0;
    const std::size_t cycle_edges = g.vertex_count() == 2 ? 1 : g.vertex_count();
    EXPECT_EQ(oc.chords.size() + cycle_edges, simple);
  }
}

TEST(OuterFaces, SquareWithDiagonal) {
  const auto faces = outer_faces(find_outer_cycle(square_with_diagonal()));
  ASSERT_EQ(faces.size(), 2u);
  for (const auto& f : faces) EXPECT_EQ(f.size(), 3u);
}

TEST(BuildDual, Examples) {
  const DualTree c = build_dual(find_outer_cycle(cycle_graph(6)));
  EXPECT_EQ(c.tree.vertex_count(), 1u);
  EXPECT_EQ(c.tree.multiplicity(0), 6u);

  const DualTree sq = build_dual(find_outer_cycle(square_with_diagonal()));
  EXPECT_EQ(sq.tree.vertex_count(), 2u);
  EXPECT_EQ(sq.tree.multiplicities(), (std::vector<std::size_t>{2, 2}));

  const MultiGraph theta(2, {{0, 1}, {0, 1}, {1, 0}});
  const DualTree th = build_dual(find_outer_cycle(theta));
  EXPECT_EQ(th.tree.vertex_count(), 2u);
  EXPECT_EQ(th.tree.multiplicities(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(exact_div(chromatic_vjtree(th.tree), kT), oracle_flow(theta));
}

TEST(BuildDual, EulerCountAndLemmas) {
  Rng rng(42);
  for (int iter = 0; iter < 300; ++iter) {
    testing::OuterplanarParams params;
    params.max_loops = 0;
    const bool simple_only = iter % 2 == 0;
    if (simple_only) params.max_mult = 1;
    const MultiGraph g = testing::random_outerplanar(rng, OuterplanarShape::kBlock, params);
    if (simple_only && g.vertex_count() < 3) continue;
    const DualTree d = build_dual(find_outer_cycle(g));
    EXPECT_EQ(d.tree.vertex_count() + g.vertex_count(), g.edge_count() + 1);

    std::size_t apex_degree = 0;
    bool has_degree_two = false;
    for (VertexId v = 0; v < d.tree.vertex_count(); ++v) {
      const std::size_t deg = d.tree.neighbors()[v].size() + d.tree.multiplicity(v);
      apex_degree += d.tree.multiplicity(v);
      if (simple_only) EXPECT_GE(deg, 3u);
      has_degree_two = has_degree_two || deg == 2;
    }
    if (simple_only) EXPECT_GE(apex_degree, 3u);
    // Parallel edges in the primal show up as degree-2 dual vertices.
    const bool has_parallel = [&] {
      const OuterCycle oc = find_outer_cycle(g);
      return std::any_of(oc.parallel_count.begin(), oc.parallel_count.end(),
                         [](const auto& kv) { return kv.second > 1; });
    }();
    if (g.vertex_count() > 2) EXPECT_EQ(has_parallel, has_degree_two);
  }
}

TEST(FlowOuterplanar, Examples) {
  const MultiGraph tree(4, {{0, 1}, {1, 2}, {1, 3}});
  EXPECT_TRUE(flow_outerplanar(tree).is_zero());
  EXPECT_EQ(flow_outerplanar(cycle_graph(4)), IntPoly::t_minus(1));
  EXPECT_EQ(flow_outerplanar(cycle_graph(4)), oracle_flow(cycle_graph(4)));
  // The hub makes W4 non-outerplanar; its flow is covered by the wheel module.
  EXPECT_EQ(code_of([] { flow_outerplanar(wheel4()); }), ErrorCode::kNotOuterplanar);
}

TEST(FlowOuterplanar, LoopsAndIsolatedVertices) {
  EXPECT_EQ(flow_outerplanar(MultiGraph(1, {{0, 0}, {0, 0}})),
            pow(IntPoly::t_minus(1), 2));
  EXPECT_EQ(flow_outerplanar(MultiGraph(3, {})), IntPoly({1}));
  const MultiGraph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  EXPECT_EQ(flow_outerplanar(bowtie), pow(IntPoly::t_minus(1), 2));
}

TEST(FlowOuterplanar, MatchesOracle) {
  Rng rng(43);
  OracleOptions opts;
  opts.memoize = true;
  opts.max_edges = 64;
  for (int iter = 0; iter < 150; ++iter) {
    const OuterplanarShape shape = testing::shape_for_index(iter);
    testing::OuterplanarParams params;
    params.max_vertices = 8;
    const MultiGraph g = testing::random_outerplanar(rng, shape, params);
    const IntPoly f = flow_outerplanar(g);
    ASSERT_EQ(f, oracle_flow(g, opts)) << "iteration " << iter;
    EXPECT_EQ(eval(f, 2), testing::flow_parity(g));
    if (!bridges(g).empty()) EXPECT_TRUE(f.is_zero());
  }
}

TEST(ChromaticOuterplanar, Examples) {
  EXPECT_EQ(chromatic_outerplanar(cycle_graph(5)), chromatic_cycle(5));
  EXPECT_TRUE(chromatic_outerplanar(MultiGraph(2, {{0, 1}, {1, 1}})).is_zero());
  EXPECT_EQ(chromatic_outerplanar(MultiGraph(2, {{0, 1}, {0, 1}})), IntPoly({0, -1, 1}));
  EXPECT_EQ(chromatic_outerplanar(MultiGraph(2, {})), IntPoly({0, 0, 1}));
}

TEST(ChromaticOuterplanar, MatchesOracle) {
  Rng rng(44);
  for (int iter = 0; iter < 200; ++iter) {
    const MultiGraph g = testing::random_outerplanar(rng, testing::shape_for_index(iter));
    const IntPoly p = chromatic_outerplanar(g);
    ASSERT_EQ(p, oracle_chromatic(g)) << "iteration " << iter;
    if (!p.is_zero()) EXPECT_TRUE(testing::chromatic_shape_ok(p, g));
  }
}

}  // namespace
}  // namespace vjpoly
