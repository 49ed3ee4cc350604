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

#include "vjpoly/wheels.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vjpoly/errors.hpp"
#include "vjpoly/outerplanar.hpp"

namespace vjpoly {

PhiString::PhiString(std::vector<std::size_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::kInvalidSize, "phi-string is empty");
}

std::size_t PhiString::spoke_count() const {
  return std::accumulate(values_.begin(), values_.end(), std::size_t{0});
}

PhiString PhiString::reduced() const {
  std::vector<std::size_t> out(values_);
  for (auto& a : out) a = std::min<std::size_t>(a, 1);
  return PhiString(std::move(out));
}

MultiGraph realize_wheel(const PhiString& phi) {
  const std::size_t n = phi.length();
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (VertexId i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < phi.values()[i]; ++k) edges.push_back({i, n});
  }
  return MultiGraph(n + 1, std::move(edges));
}

IntPoly chromatic_clique_join(std::size_t n,
                              const std::vector<std::size_t>& multiplicity) {
  if (n < 1) throw Error(ErrorCode::kInvalidSize, "clique needs n >= 1");
  if (!multiplicity.empty() && multiplicity.size() != n) {
    throw Error(ErrorCode::kInvalidSize,
                "multiplicity vector length differs from n");
  }
  const auto s = std::count_if(multiplicity.begin(), multiplicity.end(),
                               [](std::size_t m) { return m > 0; });
  return mul(IntPoly::t_minus(static_cast<long>(s)),
             chromatic_complete(static_cast<long>(n)));
}

PhiString phi_dual(const PhiString& phi) {
  const auto& a = phi.values();
  const std::size_t n = a.size();
  if (phi.spoke_count() == 0) throw Error(ErrorCode::kNoSpokes, "phi-string has no spokes");
  std::vector<std::size_t> out;
  out.reserve(phi.spoke_count());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    out.insert(out.end(), a[i] - 1, 0);
    std::size_t run = 0;
    for (std::size_t j = (i + 1) % n; a[j] == 0; j = (j + 1) % n) ++run;
    out.push_back(run + 1);
  }
  return PhiString(std::move(out));
}

FaceDecomposition face_sizes(const PhiString& phi) {
  FaceDecomposition fd;
  const PhiString dual = phi_dual(phi);
  for (std::size_t x : dual.values()) fd.face_sizes.push_back(x + 2);
  const std::size_t s = fd.face_sizes.size();
  const auto& f = fd.face_sizes;

  // suffix[i] = sum_{j >= i} (f_j - 2), 0-based
  std::vector<std::size_t> suffix(s + 1, 0);
  for (std::size_t j = s; j-- > 0;) suffix[j] = suffix[j + 1] + (f[j] - 2);

  for (std::size_t i = 1; i <= s; ++i) {
    fd.merged_sizes.push_back(2 + suffix[i - 1]);
    if (i == 1) {
      fd.term_faces.push_back({phi.length()});
      continue;
    }
    std::vector<std::size_t> g(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i - 1));
    g.back() -= 1;
    g.push_back(fd.merged_sizes.back() - 1);
    fd.term_faces.push_back(std::move(g));
  }
  return fd;
}

IntPoly chromatic_wheel_telescoped(const PhiString& phi) {
  const PhiString r = phi.reduced();
  const long n = static_cast<long>(r.length());
  const IntPoly cycle = chromatic_cycle(n);
  const IntPoly t = IntPoly::monomial(1, 1);
  switch (r.spoke_count()) {
    case 0:
      return cycle.shifted(1);
    case 1:
      return mul(cycle, IntPoly::t_minus(1));
    default:
      break;
  }

  const FaceDecomposition fd = face_sizes(r);
  const IntPoly edge_poly{0, -1, 1};
  IntPoly out = cycle.shifted(1);
  IntPoly glue{1};
  for (std::size_t i = 0; i < fd.term_faces.size(); ++i) {
    std::vector<IntPoly> cycles;
    for (std::size_t size : fd.term_faces[i]) {
      cycles.push_back(chromatic_cycle(static_cast<long>(size)));
    }
    out -= exact_div(product(std::move(cycles)), glue);
    glue = mul(glue, edge_poly);
  }
  return out;
}

IntPoly chromatic_wheel_literal(const PhiString& phi) {
  const PhiString r = phi.reduced();
  const std::size_t n = r.length();
  const MultiGraph wheel = realize_wheel(r);
  const std::size_t s = r.spoke_count();
  const VertexId apex = n;

  // Spokes e_1..e_s follow the n cycle edges.
  auto with_spokes = [&](std::size_t count) {
    std::vector<Edge> edges(wheel.edges().begin(),
                            wheel.edges().begin() + static_cast<std::ptrdiff_t>(n + count));
    return MultiGraph(n + 1, std::move(edges));
  };

  IntPoly out = chromatic_outerplanar(with_spokes(0));
  for (std::size_t i = 1; i <= s; ++i) {
    const MultiGraph partial = with_spokes(i);
    const Edge spoke = partial.edge(n + i - 1);
    out -= chromatic_outerplanar(contract(partial, spoke.u, apex));
  }
  return out;
}

IntPoly flow_wheel(const PhiString& phi) {
  switch (phi.spoke_count()) {
    case 0:
      return IntPoly::t_minus(1);
    case 1:
      return {};
    default:
      break;
  }
  return exact_div(chromatic_wheel_telescoped(phi_dual(phi)),
                   IntPoly::monomial(1, 1));
}

}  // namespace vjpoly
