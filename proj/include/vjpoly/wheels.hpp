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

#ifndef VJPOLY_WHEELS_HPP_
#define VJPOLY_WHEELS_HPP_

#include <cstddef>
#include <vector>

#include "vjpoly/multigraph.hpp"
#include "vjpoly/poly.hpp"

namespace vjpoly {

// Apex multiplicities a_1..a_n around a cycle, clockwise. Encodes the
// generalized wheel: cycle v_1..v_n plus an apex with a_i spokes to v_i.
class PhiString {
 public:
  // Throws Error(kInvalidSize) when empty.
  explicit PhiString(std::vector<std::size_t> values);

  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t length() const { return values_.size(); }
  // Total number of spokes.
  std::size_t spoke_count() const;
  // Every entry clamped to at most 1.
  PhiString reduced() const;

  friend bool operator==(const PhiString&, const PhiString&) = default;

 private:
  std::vector<std::size_t> values_;
};

// Wheel graph of a phi-string: cycle vertices 0..n-1 (edge i joins i and
// i+1 mod n, so n = 1 is a loop and n = 2 a digon), apex n. Cycle edges
// take ids 0..n-1, spokes follow in clockwise order.
MultiGraph realize_wheel(const PhiString& phi);

// (t - s) t (t-1) ... (t-n+1), s = number of distinct joined vertices.
// `multiplicity` has one entry per clique vertex.
IntPoly chromatic_clique_join(std::size_t n,
                              const std::vector<std::size_t>& multiplicity);

// phi-string of the planar dual wheel: for each spoked vertex in order,
// a_i - 1 zeros followed by 1 + (length of the zero run after it, read
// cyclically). Output length = spoke count, output sum = n. Throws
// Error(kNoSpokes) when nothing is joined.
PhiString phi_dual(const PhiString& phi);

// Bounded faces of the wheel and the per-term data of the telescoped sum.
struct FaceDecomposition {
  // f_1..f_s: face j lies clockwise between spoke j and spoke j+1.
  std::vector<std::size_t> face_sizes;
  // For term i = 1..s (stored at i-1): size of the face of
  // (wheel minus spokes i+1..s) that spans from spoke i back to spoke 1,
  // i.e. 2 + sum_{j>=i} (f_j - 2). For i = 1 the lone spoke is counted on
  // both sides, giving n + 2.
  std::vector<std::size_t> merged_sizes;
  // For term i: face sizes of (wheel minus spokes i+1..s) / spoke i.
  std::vector<std::vector<std::size_t>> term_faces;
};

// Throws Error(kNoSpokes) when nothing is joined.
FaceDecomposition face_sizes(const PhiString& phi);

// t P(C_n) - sum_i prod_{j in G_i} P(C_j) / (t(t-1))^(i-1), after reducing
// multiplicities to 0/1. Fewer than two spokes use closed forms.
IntPoly chromatic_wheel_telescoped(const PhiString& phi);

// Same polynomial by literally removing spokes one at a time: each
// contracted graph is built explicitly and evaluated from its faces.
IntPoly chromatic_wheel_literal(const PhiString& phi);

// F(wheel) = P(dual wheel) / t. Zero with a single spoke (a bridge),
// t - 1 with none.
IntPoly flow_wheel(const PhiString& phi);

}  // namespace vjpoly

#endif  // VJPOLY_WHEELS_HPP_
