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

#ifndef PARSUB_ADVERSARIAL_HPP_
#define PARSUB_ADVERSARIAL_HPP_

#include <optional>
#include <string>

#include "parsub/graphmetrics.hpp"
#include "parsub/objective.hpp"
#include "parsub/rational.hpp"
#include "parsub/structure.hpp"

namespace parsub {

// A concrete (objective, decision space, graph) whose worst-resolution greedy
// ratio equals predicted_ratio exactly.
struct WitnessInstance {
  SetFunction f;
  AgentSpace x;
  InformationGraph g;
  Rational predicted_ratio;
  std::string bound_ref;
  // λ for curvature witnesses, p for p-additive witnesses.
  std::optional<Rational> parameter;
};

// Agents of a maximum independent set I get {u_i, v_i}; everyone else the
// null decision. With f = min(1, |x∩U|) λ + |x∩U| (1 − λ) + |x∩V| every agent
// in I is indifferent between u_i and v_i, the worst greedy takes all u's and
// the ratio is (α − (α − 1) λ) / α. Requires λ ∈ [0, 1] and a non-empty graph.
WitnessInstance CurvatureWitness(const InformationGraph& g, const Rational& lambda,
                                 int cap = kDefaultGraphCap);

// With a = α_p(G) and J a maximum p-pseudo-independent set, members of J get
// {u_k, v_k}. If some w has p-sibling status for J it additionally gets
// {u_{a+1}, t}, where t is worthless. f = min(1, |x∩U|/p) + |x∩V|/p. The
// ratio is p/(a + 1) with a sibling and p/a without. Requires 1 ≤ p ≤ a.
WitnessInstance PAdditiveWitness(const InformationGraph& g, int p,
                                 int cap = kDefaultGraphCap);

// Two agents on an edge: agent 1 chooses between a → {y1} and b → {y2},
// agent 2 only has b' → {y2}; unit weights. Worst greedy takes b and gets 1
// against an optimum of 2.
WitnessInstance SequentialHalfWitness();

}  // namespace parsub

#endif  // PARSUB_ADVERSARIAL_HPP_
