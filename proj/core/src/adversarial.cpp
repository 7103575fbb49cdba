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

#include "parsub/adversarial.hpp"

#include <utility>
#include <vector>

#include "parsub/errors.hpp"

namespace parsub {

WitnessInstance CurvatureWitness(const InformationGraph& g, const Rational& lambda,
                                 int cap) {
  if (lambda < 0 || lambda > 1) {
    throw InputError("lambda: must lie in [0, 1], got " + ToString(lambda));
  }
  if (g.n() == 0) throw InputError("graph: needs at least one agent");
  const InvariantWitness independent = IndependenceNumber(g, cap);
  const int alpha = independent.value;

  std::vector<std::string> ground;
  ElementSet u = 0;
  ElementSet v = 0;
  for (int i : independent.vertices) {
    u |= Singleton(static_cast<int>(ground.size()));
    ground.push_back("u" + std::to_string(i));
  }
  for (int i : independent.vertices) {
    v |= Singleton(static_cast<int>(ground.size()));
    ground.push_back("v" + std::to_string(i));
  }
  std::vector<ElementSet> decisions(g.n(), 0);
  for (int k = 0; k < alpha; ++k) {
    decisions[independent.vertices[k] - 1] = Singleton(k) | Singleton(alpha + k);
  }

  SetFunction f = SetFunction::CurvatureWitness(std::move(ground), lambda, u, v);
  AgentSpace x(f, std::move(decisions));
  return WitnessInstance{
      std::move(f), std::move(x), g,
      (Rational(alpha) - Rational(alpha - 1) * lambda) / alpha,
      "curvature upper bound (alpha - (alpha - 1) lambda) / alpha", lambda};
}

WitnessInstance PAdditiveWitness(const InformationGraph& g, int p, int cap) {
  if (p < 1) throw InputError("p: must be a positive integer, got " + std::to_string(p));
  const InvariantWitness best = PseudoIndependenceNumber(g, p, cap);
  const int a = best.value;
  if (p > a) {
    throw InputError("p: the construction needs p <= alpha_p(G) = " + std::to_string(a) +
                     ", got " + std::to_string(p));
  }
  const std::optional<PSiblingWitness> sibling = FindPSibling(g, p, cap);
  const std::vector<int>& members =
      sibling ? sibling->pseudo_independent_set : best.vertices;
  const int u_count = sibling ? a + 1 : a;

  std::vector<std::string> ground;
  ElementSet u = 0;
  ElementSet v = 0;
  for (int k = 1; k <= u_count; ++k) {
    u |= Singleton(static_cast<int>(ground.size()));
    ground.push_back("u" + std::to_string(k));
  }
  for (int k = 1; k <= a; ++k) {
    v |= Singleton(static_cast<int>(ground.size()));
    ground.push_back("v" + std::to_string(k));
  }
  std::vector<ElementSet> decisions(g.n(), 0);
  for (int k = 0; k < a; ++k) {
    decisions[members[k] - 1] = Singleton(k) | Singleton(u_count + k);
  }
  if (sibling) {
    const int t = static_cast<int>(ground.size());
    ground.push_back("t");
    decisions[sibling->w - 1] = Singleton(a) | Singleton(t);
  }

  SetFunction f = SetFunction::PAdditiveWitness(std::move(ground), p, u, v);
  AgentSpace x(f, std::move(decisions));
  const Rational ratio = sibling ? Rational(p, a + 1) : Rational(p, a);
  std::string ref = sibling ? "p-additive upper bound p / (alpha_p + 1), p-sibling present"
                            : "p-additive upper bound p / alpha_p, no p-sibling";
  return WitnessInstance{std::move(f), std::move(x), g, ratio, std::move(ref),
                         Rational(p)};
}

WitnessInstance SequentialHalfWitness() {
  SetFunction f = SetFunction::Cover({"a", "b", "b'"}, {"y1", "y2"},
                                     {Rational(1), Rational(1)},
                                     {{"y1"}, {"y2"}, {"y2"}});
  AgentSpace x = AgentSpace::FromIds(f, {{"a", "b"}, {"b'"}});
  return WitnessInstance{std::move(f), std::move(x), InformationGraph::Complete(2),
                         Rational(1, 2), "sequential greedy tightness 1/2",
                         std::nullopt};
}

}  // namespace parsub
