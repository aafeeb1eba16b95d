// Copyright 2026 The advbayes Authors
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

// Solves a two-Gaussian problem over a few radii and prints the optimal
// classes, then certifies one of them against the dual bound.

#include <cstdio>

#include "advbayes/advbayes.hpp"

int main() {
  using namespace advbayes;
  const DistributionPair pair = catalog::GaussiansEqualVariances(0.0, 2.0);
  for (double eps : {0.25, 0.75, 1.25}) {
    const SolveReport r = Solve(pair, eps);
    std::printf("eps=%.2f  min_risk=%.6f  classes=%zu\n", eps, r.min_risk,
                r.classes.size());
    for (const auto& c : r.classes)
      std::printf("    %s\n", ToString(c.representative).c_str());
  }
  const DualityGap g = ComputeDualityGap(pair, 0.25, 1e-3, 2);
  std::printf("eps=0.25  primal=%.6f  dual=%.6f\n", g.primal, g.dual);
  return 0;
}
