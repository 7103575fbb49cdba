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

#include "parsub/suite.hpp"

#include <algorithm>
#include <string>

#include "parsub/adversarial.hpp"
#include "parsub/errors.hpp"

namespace parsub {

int Draw(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

std::pair<SetFunction, AgentSpace> RandomCoverInstance(Rng& rng, int n,
                                                       const RandomCoverOptions& options) {
  if (n < 1) throw InputError("n: must be at least 1");
  const int target_count = Draw(rng, 1, options.max_targets);
  std::vector<std::string> targets;
  std::vector<Rational> weights;
  for (int t = 0; t < target_count; ++t) {
    targets.push_back("y" + std::to_string(t + 1));
    // One weight in four is a half-integer.
    const int w = Draw(rng, 1, options.max_weight);
    weights.push_back(Draw(rng, 0, 3) == 0 ? Rational(2 * w - 1, 2) : Rational(w));
  }

  std::vector<int> sizes(n, 0);
  int budget = options.max_ground;
  for (int a = 0; a < n; ++a) {
    if (Draw(rng, 1, 100) <= options.empty_agent_percent) continue;
    // Keep at least one element for every later agent.
    const int reserve = n - a - 1;
    const int hi = std::min(options.max_decisions_per_agent, budget - reserve);
    if (hi < 1) continue;
    sizes[a] = Draw(rng, 1, hi);
    budget -= sizes[a];
  }
  if (std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 0; })) {
    sizes[Draw(rng, 0, n - 1)] = 1;
  }

  std::vector<std::string> ground;
  std::vector<std::vector<std::string>> coverage;
  std::vector<std::vector<std::string>> agents(n);
  for (int a = 0; a < n; ++a) {
    for (int k = 0; k < sizes[a]; ++k) {
      const std::string id = "x" + std::to_string(a + 1) + "_" + std::to_string(k + 1);
      ground.push_back(id);
      agents[a].push_back(id);
      std::vector<std::string> covered;
      for (int t = 0; t < target_count; ++t)
        if (Draw(rng, 0, 1) == 1) covered.push_back(targets[t]);
      if (covered.empty()) covered.push_back(targets[Draw(rng, 0, target_count - 1)]);
      coverage.push_back(std::move(covered));
    }
  }
  SetFunction f = SetFunction::Cover(std::move(ground), std::move(targets),
                                     std::move(weights), coverage);
  AgentSpace x = AgentSpace::FromIds(f, agents);
  return {std::move(f), std::move(x)};
}

IterationAssignment RandomAssignment(Rng& rng, int n, int q) {
  BlockSize(n, q);
  // Choose q − 1 distinct cut points among the n − 1 gaps.
  std::vector<int> gaps(n - 1);
  for (int k = 0; k < n - 1; ++k) gaps[k] = k + 1;
  for (int k = 0; k < q - 1; ++k) std::swap(gaps[k], gaps[Draw(rng, k, n - 2)]);
  std::vector<int> cuts(gaps.begin(), gaps.begin() + (q - 1));
  std::sort(cuts.begin(), cuts.end());
  IterationAssignment p{q, std::vector<int>(n)};
  int level = 1;
  std::size_t next = 0;
  for (int i = 1; i <= n; ++i) {
    p.iteration[i - 1] = level;
    if (next < cuts.size() && cuts[next] == i) {
      ++level;
      ++next;
    }
  }
  return p;
}

InformationGraph RandomFeasibleGraph(Rng& rng, int n, int q) {
  const InformationGraph full = InducedGraph(RandomAssignment(rng, n, q));
  std::vector<Edge> kept;
  for (const Edge& e : full.edges())
    if (Draw(rng, 0, 1) == 1) kept.push_back(e);
  return {n, std::move(kept)};
}

std::vector<CertifyCase> WitnessSuite(int alpha_max, const std::vector<Rational>& lambdas) {
  std::vector<CertifyCase> out;
  auto add = [&](WitnessInstance w, std::string id, std::string graph_id) {
    out.push_back(CertifyCase{std::move(id), std::move(graph_id), std::move(w.f),
                              std::move(w.x), std::move(w.g), w.predicted_ratio});
  };
  for (int alpha = 1; alpha <= alpha_max; ++alpha) {
    struct Named {
      std::string id;
      InformationGraph g;
    };
    std::vector<Named> graphs{
        {"edgeless(" + std::to_string(alpha) + ")", InformationGraph::Edgeless(alpha)},
        {"complement_turan(" + std::to_string(2 * alpha) + "," + std::to_string(alpha) + ")",
         ComplementTuran(2 * alpha, alpha)},
        {"star(" + std::to_string(alpha + 1) + ")", InformationGraph::Star(alpha + 1)},
    };
    for (const auto& [gid, g] : graphs) {
      for (const Rational& lambda : lambdas) {
        add(CurvatureWitness(g, lambda), "curvature[" + gid + ",lambda=" + ToString(lambda) + "]",
            gid);
      }
    }
    for (int p = 1; p <= std::min(alpha, 3); ++p) {
      add(PAdditiveWitness(graphs[2].g, p), "p-additive[" + graphs[2].id + ",p=" + std::to_string(p) + "]",
          graphs[2].id);
      add(PAdditiveWitness(graphs[0].g, p), "p-additive[" + graphs[0].id + ",p=" + std::to_string(p) + "]",
          graphs[0].id);
    }
  }
  add(SequentialHalfWitness(), "sequential-half", "complete(2)");
  return out;
}

std::vector<CertifyCase> RandomCoverSuite(std::uint64_t seed, int count, int n_max,
                                          bool all_q) {
  if (n_max < 1) throw InputError("n-max: must be at least 1");
  Rng rng(seed);
  std::vector<CertifyCase> out;
  for (int k = 0; k < count; ++k) {
    const int n = Draw(rng, 1, n_max);
    auto [f, x] = RandomCoverInstance(rng, n);
    const std::string base = "random-" + std::to_string(k);
    if (all_q) {
      for (int q = 1; q <= n; ++q) {
        const std::string gid = "optimal(" + std::to_string(n) + "," + std::to_string(q) + ")";
        out.push_back(CertifyCase{base + "@" + gid, gid, f, x, OptimalGraph(n, q), std::nullopt});
      }
      continue;
    }
    const int q = Draw(rng, 1, n);
    if (k % 2 == 0) {
      const std::string gid = "optimal(" + std::to_string(n) + "," + std::to_string(q) + ")";
      out.push_back(CertifyCase{base + "@" + gid, gid, std::move(f), std::move(x),
                                OptimalGraph(n, q), std::nullopt});
    } else {
      const std::string gid = "random-feasible(" + std::to_string(n) + "," + std::to_string(q) + ")#" +
                              std::to_string(k);
      out.push_back(CertifyCase{base + "@" + gid, gid, std::move(f), std::move(x),
                                RandomFeasibleGraph(rng, n, q), std::nullopt});
    }
  }
  return out;
}

}  // namespace parsub
