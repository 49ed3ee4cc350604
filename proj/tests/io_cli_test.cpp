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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/generators.hpp"
#include "vjpoly/cli.hpp"
#include "vjpoly/errors.hpp"
#include "vjpoly/io.hpp"

namespace vjpoly {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("vjpoly_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& body) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

 private:
  fs::path path_;
};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kTooLarge;  // sentinel: nothing thrown
}

TEST(FormatPoly, Layout) {
  EXPECT_EQ(format_poly(IntPoly()), "poly 0");
  EXPECT_EQ(format_poly(IntPoly({0, -1, 1})), "poly 0 -1 1");
  EXPECT_EQ(format_phi(PhiString({2, 0, 1})), "phi 2,0,1");
}

TEST(FormatPoly, RoundTrip) {
  testing::Rng rng(71);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Integer> c(testing::uniform(rng, 0, 30));
    for (auto& x : c) {
      x = static_cast<long>(testing::uniform(rng, 0, 2000)) - 1000;
      x *= Integer("123456789012345678901234567890");
    }
    const IntPoly p(std::move(c));
    EXPECT_EQ(parse_poly(format_poly(p)), p);
  }
  EXPECT_EQ(code_of([] { parse_poly("poly 1 x"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_poly("1 2"); }), ErrorCode::kParseError);
}

TEST(ParseVjt, Grammar) {
  std::istringstream in(
      "# a path with two joins\n"
      "vjt 3\n"
      "edge 1 2   # first\n"
      "\n"
      "edge 2 3\n"
      "join 1 1\n"
      "join 3 2\n"
      "join 3 1\n");
  const VertexJoinTree t = parse_vjt(in);
  EXPECT_EQ(t.vertex_count(), 3u);
  EXPECT_EQ(t.multiplicities(), (std::vector<std::size_t>{1, 0, 3}));
  EXPECT_EQ(t.tree_edges()[1], (TreeEdge{1, 2}));
}

TEST(ParseVjt, Errors) {
  auto parse = [](const std::string& text) {
    return code_of([&] {
      std::istringstream in(text);
      parse_vjt(in);
    });
  };
  EXPECT_EQ(parse(""), ErrorCode::kParseError);
  EXPECT_EQ(parse("tree 3\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse("vjt 3\nedge 1 2\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse("vjt 2\nedge 1 3\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse("vjt 2\nedge 1 2\njoin 1 0\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse("vjt 3\nedge 1 2\njoin 1 1\nedge 2 3\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse("vjt 2\nedge 1 2\nspoke 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse("vjt 3\nedge 1 2\nedge 2 1\n"), ErrorCode::kInvalidTree);
  try {
    std::istringstream in("vjt 2\n\nedge 1 x\n");
    parse_vjt(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(ParseGr, Grammar) {
  std::istringstream in(
      "c a triangle with a doubled edge and a loop\n"
      "p edge 3 5\n"
      "e 1 2\ne 2 3\ne 3 1\ne 1 2\ne 2 2\n");
  const MultiGraph g = parse_gr(in);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_TRUE(g.edge(4).is_loop());
}

TEST(ParseGr, Errors) {
  auto parse = [](const std::string& text) {
    return code_of([&] {
      std::istringstream in(text);
      parse_gr(in);
    });
  };
  EXPECT_EQ(parse("p edge 2 2\ne 1 2\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse("p edge 2 1\ne 1 2\ne 1 2\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse("p edge 2 1\ne 0 2\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse("p graph 2 1\ne 1 2\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse("e 1 2\n"), ErrorCode::kParseError);
}

TEST(ParseLists, Errors) {
  EXPECT_EQ(parse_count_list("1,0,3"), (std::vector<std::size_t>{1, 0, 3}));
  EXPECT_EQ(parse_int_list("-2,5"), (std::vector<long>{-2, 5}));
  EXPECT_EQ(code_of([] { parse_count_list("1,,2"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_count_list("-1"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_count_list(""); }), ErrorCode::kParseError);
}

TEST(Cli, ChromaticWheel) {
  const auto r = run({"chromatic", "wheel", "--phi", "1,1,1,1", "--eval", "3,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "poly 0 14 -31 24 -8 1\neval 3 6\neval 4 72\n");
  const auto front = run({"--eval", "3", "chromatic", "wheel", "--phi", "1,1,1,1"});
  EXPECT_EQ(front.out, "poly 0 14 -31 24 -8 1\neval 3 6\n");
}

TEST(Cli, DualPhiFigureFour) {
  const auto r = run({"dual", "phi", "--phi", "1,0,1,2,0,0,1,4,0,1,1,0,3,0,0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "phi 2,1,0,3,1,0,0,0,2,1,2,0,0,4\n");
}

TEST(Cli, FlowOuterplanarOfPathIsZero) {
  TempDir dir;
  const auto file = dir.write("tree.gr", "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  const auto r = run({"flow", "outerplanar", file});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "poly 0\n");
}

TEST(Cli, ChromaticTreeAndClique) {
  TempDir dir;
  const auto file = dir.write("p3.vjt", "vjt 3\nedge 1 2\nedge 2 3\njoin 1 1\njoin 3 1\n");
  EXPECT_EQ(run({"chromatic", "tree", file}).out, "poly 0 -3 6 -4 1\n");
  EXPECT_EQ(run({"chromatic", "clique", "--n", "3", "--join", "1,2"}).out,
            "poly 0 -4 8 -5 1\n");
  EXPECT_EQ(run({"chromatic", "clique", "--n", "2"}).out, "poly 0 0 -1 1\n");
  EXPECT_EQ(run({"chromatic", "clique", "--n", "2", "--join", "1,1"}).out,
            run({"chromatic", "clique", "--n", "2", "--join", "1"}).out);
}

TEST(Cli, OracleAndFlowWheel) {
  TempDir dir;
  const auto w4 = dir.write("w4.gr",
                            "p edge 5 8\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
                            "e 1 5\ne 2 5\ne 3 5\ne 4 5\n");
  EXPECT_EQ(run({"oracle", "flow", w4}).out, "poly 14 -31 24 -8 1\n");
  EXPECT_EQ(run({"oracle", "flow", w4, "--memoize"}).out, "poly 14 -31 24 -8 1\n");
  EXPECT_EQ(run({"flow", "wheel", "--phi", "1,1,1,1"}).out, "poly 14 -31 24 -8 1\n");
  EXPECT_EQ(run({"oracle", "chromatic", w4}).out, "poly 0 14 -31 24 -8 1\n");
}

TEST(Cli, DomainErrorsExitOne) {
  TempDir dir;
  const auto w4 = dir.write("w4.gr",
                            "p edge 5 8\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
                            "e 1 5\ne 2 5\ne 3 5\ne 4 5\n");
  const auto r = run({"flow", "outerplanar", w4});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(r.err.rfind("error: NotOuterplanar: ", 0), 0u);
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1);

  const auto d = run({"dual", "phi", "--phi", "0,0"});
  EXPECT_EQ(d.code, 1);
  EXPECT_EQ(d.err.rfind("error: NoSpokes: ", 0), 0u);

  const auto big = dir.write("big.gr", "p edge 2 20\n" + [] {
    std::string s;
    for (int i = 0; i < 20; ++i) s += "e 1 2\n";
    return s;
  }());
  EXPECT_EQ(run({"oracle", "flow", big}).code, 1);
  EXPECT_EQ(run({"oracle", "flow", big, "--no-limit", "--memoize"}).out.rfind("poly", 0), 0u);
}

TEST(Cli, ParseErrorsExitTwo) {
  TempDir dir;
  const auto bad = dir.write("bad.gr", "p edge 2 1\ne 1 9\n");
  const auto r = run({"flow", "outerplanar", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: ParseError: line 2", 0), 0u);
  EXPECT_EQ(run({"chromatic", "wheel", "--phi", "1,x"}).code, 2);
  EXPECT_EQ(run({"chromatic", "wheel", "--phi", "1,1", "--eval", "q"}).code, 2);
  EXPECT_EQ(run({"flow", "outerplanar", (fs::temp_directory_path() / "no_such.gr").string()}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"chromatic", "wheel"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chromatic"), std::string::npos);
}

TEST(Cli, Deterministic) {
  TempDir dir;
  const auto file = dir.write("x.vjt", "vjt 5\nedge 1 2\nedge 2 3\nedge 2 4\nedge 4 5\n"
                                       "join 1 2\njoin 3 1\njoin 5 1\n");
  const auto a = run({"chromatic", "tree", file, "--eval", "2,3,10"});
  const auto b = run({"chromatic", "tree", file, "--eval", "2,3,10"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_poly(a.out.substr(0, a.out.find('\n'))).degree(), 6u);
}

}  // namespace
}  // namespace vjpoly
