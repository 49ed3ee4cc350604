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

#include "vjpoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include "vjpoly/errors.hpp"
#include "vjpoly/io.hpp"
#include "vjpoly/oracle.hpp"
#include "vjpoly/outerplanar.hpp"
#include "vjpoly/vjtree.hpp"
#include "vjpoly/wheels.hpp"

namespace vjpoly {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  return in;
}

MultiGraph read_gr(const std::string& path) {
  std::ifstream in = open_input(path);
  return parse_gr(in);
}

PhiString read_phi(const std::string& text) { return PhiString(parse_count_list(text)); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact chromatic and flow polynomials of vertex joins and outerplanar graphs",
               "vjpoly"};
  app.require_subcommand(1);
  std::string eval_points;
  app.add_option("--eval", eval_points, "Also print the value at each of t1,t2,...")
      ->configurable(false);
  app.fallthrough();

  std::string file;
  std::string phi_text;
  std::string join_text;
  std::size_t clique_n = 0;
  bool memoize = false;
  bool no_limit = false;

  // Either a polynomial-producing action or the phi-dual printer.
  std::function<IntPoly()> compute;
  std::optional<std::function<PhiString()>> compute_phi;

  auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomials")->require_subcommand(1);
  auto* flow = app.add_subcommand("flow", "Flow polynomials")->require_subcommand(1);
  auto* dual = app.add_subcommand("dual", "Dual phi-strings")->require_subcommand(1);
  auto* oracle = app.add_subcommand("oracle", "Deletion-contraction reference")->require_subcommand(1);

  auto* c_tree = chromatic->add_subcommand("tree", "Generalized vertex join tree (.vjt)");
  c_tree->add_option("file", file)->required();
  c_tree->callback([&] {
    compute = [&] {
      std::ifstream in = open_input(file);
      return chromatic_vjtree(parse_vjt(in));
    };
  });

  auto* c_clique = chromatic->add_subcommand("clique", "Generalized vertex join clique");
  c_clique->add_option("--n", clique_n)->required();
  c_clique->add_option("--join", join_text, "Joined vertices, 1-indexed; repeats are multiplicities");
  c_clique->callback([&] {
    compute = [&] {
      std::vector<std::size_t> mult(clique_n, 0);
      if (!join_text.empty()) {
        for (std::size_t v : parse_count_list(join_text)) {
          if (v < 1 || v > clique_n) {
            throw Error(ErrorCode::kInvalidVertex, "join vertex " + std::to_string(v) +
                                                       " outside 1.." + std::to_string(clique_n));
          }
          ++mult[v - 1];
        }
      }
      return chromatic_clique_join(clique_n, mult);
    };
  });

  auto* c_wheel = chromatic->add_subcommand("wheel", "Generalized wheel from its phi-string");
  c_wheel->add_option("--phi", phi_text)->required();
  c_wheel->callback([&] { compute = [&] { return chromatic_wheel_telescoped(read_phi(phi_text)); }; });

  auto* f_outer = flow->add_subcommand("outerplanar", "Outerplanar multigraph (.gr)");
  f_outer->add_option("file", file)->required();
  f_outer->callback([&] { compute = [&] { return flow_outerplanar(read_gr(file)); }; });

  auto* f_wheel = flow->add_subcommand("wheel", "Generalized wheel from its phi-string");
  f_wheel->add_option("--phi", phi_text)->required();
  f_wheel->callback([&] { compute = [&] { return flow_wheel(read_phi(phi_text)); }; });

  auto* d_phi = dual->add_subcommand("phi", "phi-string of the dual wheel");
  d_phi->add_option("--phi", phi_text)->required();
  d_phi->callback([&] { compute_phi = [&] { return phi_dual(read_phi(phi_text)); }; });

  auto oracle_options = [&] {
    OracleOptions opts;
    opts.memoize = memoize;
    if (no_limit) {
      opts.max_vertices = 64;
      opts.max_edges = std::numeric_limits<std::size_t>::max();
    }
    return opts;
  };
  for (const char* name : {"chromatic", "flow"}) {
    auto* sub = oracle->add_subcommand(name, std::string("Reference ") + name + " polynomial (.gr)");
    sub->add_option("file", file)->required();
    sub->add_flag("--memoize", memoize, "Cache repeated subgraphs");
    sub->add_flag("--no-limit", no_limit, "Lift the size guards");
    const bool is_flow = std::string(name) == "flow";
    sub->callback([&, is_flow] {
      compute = [&, is_flow] {
        const MultiGraph g = read_gr(file);
        return is_flow ? oracle_flow(g, oracle_options()) : oracle_chromatic(g, oracle_options());
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kParseError ? 2 : 1;
  }

  try {
    std::vector<long> points;
    if (!eval_points.empty()) points = parse_int_list(eval_points);
    if (compute_phi.has_value()) {
      out << format_phi((*compute_phi)()) << "\n";
      return 0;
    }
    const IntPoly p = compute();
    out << format_poly(p) << "\n";
    for (long x : points) out << "eval " << x << " " << eval(p, Integer(x)).get_str(10) << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kParseError ? 2 : 1;
  }
}

}  // namespace vjpoly
