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

#include "vjpoly/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "vjpoly/errors.hpp"

namespace vjpoly {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool to_number(std::string_view token, T& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::size_t parse_index(std::string_view token, std::size_t n, std::size_t line_no) {
  std::size_t v = 0;
  if (!to_number(token, v)) parse_error(line_no, "expected a vertex number, got '" + std::string(token) + "'");
  if (v < 1 || v > n) {
    parse_error(line_no, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  return v - 1;
}

std::size_t parse_size(std::string_view token, std::size_t line_no) {
  std::size_t v = 0;
  if (!to_number(token, v)) parse_error(line_no, "expected a nonnegative integer, got '" + std::string(token) + "'");
  return v;
}

template <typename T>
std::vector<T> parse_list(std::string_view text) {
  std::vector<T> out;
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty list");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    T value{};
    if (!to_number(item, value)) {
      throw Error(ErrorCode::kParseError, "bad list entry '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_poly(const IntPoly& p) {
  if (p.is_zero()) return "poly 0";
  std::string out = "poly";
  for (const Integer& c : p.coeffs()) {
    out += ' ';
    out += c.get_str(10);
  }
  return out;
}

IntPoly parse_poly(std::string_view line) {
  const auto tokens = split_ws(line);
  if (tokens.size() < 2 || tokens[0] != "poly") {
    throw Error(ErrorCode::kParseError, "expected 'poly c0 ...'");
  }
  std::vector<Integer> coeffs;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    Integer c;
    if (c.set_str(std::string(tokens[i]), 10) != 0) {
      throw Error(ErrorCode::kParseError, "bad coefficient '" + std::string(tokens[i]) + "'");
    }
    coeffs.push_back(std::move(c));
  }
  return IntPoly(std::move(coeffs));
}

std::string format_phi(const PhiString& phi) {
  std::string out = "phi ";
  for (std::size_t i = 0; i < phi.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(phi.values()[i]);
  }
  return out;
}

VertexJoinTree parse_vjt(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<TreeEdge> edges;
  std::vector<std::size_t> mult;
  bool seen_join = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (!n.has_value()) {
      if (tok[0] != "vjt" || tok.size() != 2) parse_error(line_no, "expected header 'vjt <n>'");
      n = parse_size(tok[1], line_no);
      if (*n < 1) parse_error(line_no, "tree needs at least one vertex");
      mult.assign(*n, 0);
      continue;
    }
    if (tok[0] == "edge") {
      if (tok.size() != 3) parse_error(line_no, "expected 'edge <u> <v>'");
      if (seen_join) parse_error(line_no, "edge lines must precede join lines");
      if (edges.size() >= *n - 1) {
        parse_error(line_no, "more than n-1 edge lines");
      }
      edges.emplace_back(parse_index(tok[1], *n, line_no), parse_index(tok[2], *n, line_no));
    } else if (tok[0] == "join") {
      if (tok.size() != 3) parse_error(line_no, "expected 'join <v> <mult>'");
      seen_join = true;
      const std::size_t v = parse_index(tok[1], *n, line_no);
      const std::size_t m = parse_size(tok[2], line_no);
      if (m < 1) parse_error(line_no, "join multiplicity must be >= 1");
      mult[v] += m;
    } else {
      parse_error(line_no, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (!n.has_value()) parse_error(line_no, "missing 'vjt <n>' header");
  if (edges.size() != *n - 1) {
    parse_error(line_no, "expected " + std::to_string(*n - 1) + " edge lines, got " +
                             std::to_string(edges.size()));
  }
  return VertexJoinTree(*n, std::move(edges), std::move(mult));
}

MultiGraph parse_gr(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::size_t m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (!n.has_value()) {
      if (tok.size() != 4 || tok[0] != "p" || tok[1] != "edge") {
        parse_error(line_no, "expected header 'p edge <n> <m>'");
      }
      n = parse_size(tok[2], line_no);
      m = parse_size(tok[3], line_no);
      continue;
    }
    if (tok[0] != "e" || tok.size() != 3) parse_error(line_no, "expected 'e <u> <v>'");
    if (edges.size() == m) parse_error(line_no, "more than " + std::to_string(m) + " edge lines");
    edges.push_back({parse_index(tok[1], *n, line_no), parse_index(tok[2], *n, line_no)});
  }
  if (!n.has_value()) parse_error(line_no, "missing 'p edge <n> <m>' header");
  if (edges.size() != m) {
    parse_error(line_no, "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(edges.size()));
  }
  return MultiGraph(*n, std::move(edges));
}

std::vector<std::size_t> parse_count_list(std::string_view text) {
  return parse_list<std::size_t>(text);
}

std::vector<long> parse_int_list(std::string_view text) { return parse_list<long>(text); }

}  // namespace vjpoly
