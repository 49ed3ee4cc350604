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

#ifndef VJPOLY_IO_HPP_
#define VJPOLY_IO_HPP_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "vjpoly/multigraph.hpp"
#include "vjpoly/poly.hpp"
#include "vjpoly/vjtree.hpp"
#include "vjpoly/wheels.hpp"

namespace vjpoly {

// "poly c0 c1 ... cd" in ascending powers; the zero polynomial is "poly 0".
std::string format_poly(const IntPoly& p);
// Inverse of format_poly. Throws Error(kParseError).
IntPoly parse_poly(std::string_view line);

// "phi a1,a2,...,an"
std::string format_phi(const PhiString& phi);

// Vertex join tree file:
//   vjt <n>
//   edge <u> <v>      exactly n-1 lines, 1-indexed
//   join <v> <mult>   zero or more, mult >= 1, repeats add up
// '#' starts a comment. Syntax problems throw Error(kParseError) with the
// line number; a non-tree edge set throws Error(kInvalidTree).
VertexJoinTree parse_vjt(std::istream& in);

// DIMACS-style multigraph file:
//   p edge <n> <m>
//   e <u> <v>         exactly m lines, 1-indexed; u == v is a loop
// Lines starting with 'c' and '#' comments are ignored.
MultiGraph parse_gr(std::istream& in);

// Comma-separated lists such as "1,0,2". Throws Error(kParseError).
std::vector<std::size_t> parse_count_list(std::string_view text);
std::vector<long> parse_int_list(std::string_view text);

}  // namespace vjpoly

#endif  // VJPOLY_IO_HPP_
