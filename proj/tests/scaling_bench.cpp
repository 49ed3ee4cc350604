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


// Times chromatic_vjtree on random caterpillars of the given sizes and
// reports, per size, the median over several instances of the median over
// repeated runs.
// Usage: scaling_bench [r<reps>] [i<instances>] n1 n2 ...

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "support/generators.hpp"
#include "vjpoly/vjtree.hpp"

int main(int argc, char** argv) {
  using Clock = std::chrono::steady_clock;
  int reps = 3;
  int instances = 1;
  std::vector<std::size_t> sizes;
  for (int i = 1; i < argc; ++i) {
    if (argv[i][0] == 'r') {
      reps = std::atoi(argv[i] + 1);
    } else if (argv[i][0] == 'i') {
      instances = std::atoi(argv[i] + 1);
    } else {
      sizes.push_back(static_cast<std::size_t>(std::atol(argv[i])));
    }
  }
  if (sizes.empty()) sizes = {512, 1024, 2048, 4096};
  vjpoly::testing::Rng rng(20260404);
  double prev = 0;
  for (std::size_t n : sizes) {
    std::vector<double> per_instance;
    for (int k = 0; k < instances; ++k) {
      const auto tree = vjpoly::testing::random_caterpillar(rng, n);
      std::vector<double> runs;
      for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        const auto p = vjpoly::chromatic_vjtree(tree);
        runs.push_back(std::chrono::duration<double>(Clock::now() - start).count());
        if (p.degree() != n + 1) return 1;
      }
      std::sort(runs.begin(), runs.end());
      per_instance.push_back(runs[runs.size() / 2]);
    }
    std::sort(per_instance.begin(), per_instance.end());
    const double t = per_instance[per_instance.size() / 2];
    std::printf("n=%zu median %.3f s", n, t);
    if (prev > 0) std::printf("  ratio %.2f", t / prev);
    std::printf("\n");
    std::fflush(stdout);
    prev = t;
  }
}
