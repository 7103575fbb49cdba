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

#ifndef PARSUB_GREEDY_HPP_
#define PARSUB_GREEDY_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "parsub/objective.hpp"
#include "parsub/rational.hpp"
#include "parsub/structure.hpp"

namespace parsub {

// How an agent resolves a tie among equally good decisions.
//   kFirst/kLast  lowest / highest ground index among the maximizers.
//   kWorst/kBest  minimize / maximize the final value over every resolution.
//   kAll          every distinct outcome (RunGreedyAll only).
enum class TiePolicy { kFirst, kLast, kWorst, kBest, kAll };

std::string_view PolicyName(TiePolicy policy);
std::optional<TiePolicy> ParsePolicy(std::string_view name);

inline constexpr long kDefaultTieNodeCap = 1'000'000;
inline constexpr long kDefaultProfileCap = 10'000'000;

// Chosen decision (ground index) per agent; nullopt is the null decision.
using Profile = std::vector<std::optional<int>>;

struct GreedyOutcome {
  Profile profile;
  Rational value;
  // f(x_i | x_{N_i}) for the decision each agent took.
  std::vector<Rational> per_agent_marginal;
  // Distinct complete tie resolutions examined; 1 for kFirst/kLast.
  long resolutions_explored = 0;
  Schedule schedule;

  ElementSet chosen() const;
};

// Generalized greedy: agents decide in index order, each maximizing its
// marginal contribution against the decisions of its in-neighbours only.
// Among equally valued resolutions kWorst/kBest return the lexicographically
// first profile. Throws InputError on dimension mismatch or kAll, and
// CapacityError when the tie tree exceeds node_cap.
GreedyOutcome RunGreedy(const SetFunction& f, const AgentSpace& x,
                        const InformationGraph& g, TiePolicy policy,
                        long node_cap = kDefaultTieNodeCap);

// Every outcome reachable by some tie resolution, deduplicated by final
// decision set, in lexicographic profile order.
std::vector<GreedyOutcome> RunGreedyAll(const SetFunction& f, const AgentSpace& x,
                                        const InformationGraph& g,
                                        long node_cap = kDefaultTieNodeCap);

// Round-by-round parallel greedy on an iteration assignment: all agents of
// iteration k decide simultaneously against every decision from iterations
// before k. Shares no search code with RunGreedy.
GreedyOutcome RunParallelGreedy(const SetFunction& f, const AgentSpace& x,
                                const IterationAssignment& assignment,
                                TiePolicy policy,
                                long node_cap = kDefaultTieNodeCap);

struct Optimum {
  Profile profile;
  Rational value;
};

// Exhaustive maximum over all action profiles; lexicographically first
// maximizer. Throws CapacityError when Π max(1, |X_i|) exceeds cap.
Optimum BruteForceOptimum(const SetFunction& f, const AgentSpace& x,
                          long cap = kDefaultProfileCap);

// Worst-resolution greedy value over the optimum. Throws UndefinedRatioError
// when the optimum is zero.
Rational EmpiricalRatio(const SetFunction& f, const AgentSpace& x,
                        const InformationGraph& g,
                        long node_cap = kDefaultTieNodeCap,
                        long profile_cap = kDefaultProfileCap);

}  // namespace parsub

#endif  // PARSUB_GREEDY_HPP_
