// Copyright 2026 The parsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARSUB_SUITE_HPP_
#define PARSUB_SUITE_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "parsub/bounds.hpp"
#include "parsub/objective.hpp"
#include "parsub/rational.hpp"
#include "parsub/structure.hpp"

namespace parsub {

// Generators for certification suites. All randomness flows from an explicit
// seed through std::mt19937_64, whose output sequence is fixed by the
// standard; bounded draws use plain modular reduction so suites are identical
// across standard libraries.
using Rng = std::mt19937_64;

// Uniform-ish integer in [lo, hi].
int Draw(Rng& rng, int lo, int hi);

struct RandomCoverOptions {
  int max_decisions_per_agent = 3;
  int max_ground = 16;
  int max_targets = 6;
  int max_weight = 4;
  // Probability (in percent) that an agent gets no decisions at all.
  int empty_agent_percent = 10;
};

// A weighted-cover instance over n agents. At least one agent has a decision
// and every decision covers at least one positively weighted target, so the
// optimum is positive.
std::pair<SetFunction, AgentSpace> RandomCoverInstance(Rng& rng, int n,
                                                       const RandomCoverOptions& options = {});

// A random order-preserving assignment into q iterations, then each induced
// edge kept with probability 1/2. The result lies in G_{n,q}.
InformationGraph RandomFeasibleGraph(Rng& rng, int n, int q);

// A random order-preserving assignment that uses every iteration 1..q.
IterationAssignment RandomAssignment(Rng& rng, int n, int q);

// Curvature witnesses for every λ in `lambdas` on the edgeless graph, the
// complement Turán graph with α classes and the star with α leaves, for
// α = 1..alpha_max; p-additive witnesses on the same stars and edgeless
// graphs for p ≤ min(α, 3); and the sequential 1/2 witness.
std::vector<CertifyCase> WitnessSuite(int alpha_max, const std::vector<Rational>& lambdas);

// `count` random cover instances with n ∈ 1..n_max. Each instance is paired
// with OptimalGraph(n, q) for every q ≤ n when all_q is set; otherwise with
// one graph, alternating between OptimalGraph(n, q) and a random feasible
// graph for a random q.
std::vector<CertifyCase> RandomCoverSuite(std::uint64_t seed, int count, int n_max,
                                          bool all_q);

}  // namespace parsub

#endif  // PARSUB_SUITE_HPP_
