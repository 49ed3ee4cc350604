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

#ifndef VJPOLY_ORACLE_HPP_
#define VJPOLY_ORACLE_HPP_

#include <cstddef>

#include "vjpoly/multigraph.hpp"
#include "vjpoly/poly.hpp"

namespace vjpoly {

// Size guards for the exponential oracles. Exceeding a guard throws
// Error(kTooLarge); raise the limits explicitly when a bigger instance is
// known to be tractable.
struct OracleOptions {
  std::size_t max_vertices = 14;  // chromatic recursion
  std::size_t max_edges = 16;     // flow recursion
  // Cache subresults keyed by the exact labelled subgraph. Results are
  // unaffected; only the amount of repeated work changes.
  bool memoize = false;
};

// Chromatic polynomial by deletion-contraction on the lowest edge.
IntPoly oracle_chromatic(const MultiGraph& g, const OracleOptions& options = {});

// Flow polynomial by F(G) = F(G/e) - F(G-e) on the lowest-id non-loop edge,
// with F = 0 when a bridge is present and a factor (t-1) per loop.
IntPoly oracle_flow(const MultiGraph& g, const OracleOptions& options = {});

// Number of proper colorings with colors 1..t, by enumeration. Guarded at
// t^|V| <= 1e8.
Integer count_colorings(const MultiGraph& g, unsigned long t);

// Number of nowhere-zero Z_t flows, by enumeration. Each non-loop edge is
// oriented from its lower endpoint. Guarded at (t-1)^|E| <= 1e8.
Integer count_flows(const MultiGraph& g, unsigned long t);

}  // namespace vjpoly

#endif  // VJPOLY_ORACLE_HPP_
