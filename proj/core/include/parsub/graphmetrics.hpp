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

#ifndef PARSUB_GRAPHMETRICS_HPP_
#define PARSUB_GRAPHMETRICS_HPP_

#include <optional>
#include <vector>

#include "parsub/structure.hpp"

namespace parsub {

// Exact searches refuse graphs with more vertices than this unless a larger
// cap (at most 64) is passed explicitly.
inline constexpr int kDefaultGraphCap = 20;

// Upper limit on how many maximum sets the enumerators will materialize.
inline constexpr long kMaxEnumeratedSets = 1'000'000;

struct InvariantWitness {
  int value = 0;
  // A realizing vertex set (cliques, independent sets), ascending.
  std::vector<int> vertices;
  // A realizing partition (clique covers); each part ascending.
  std::vector<std::vector<int>> partition;
};

// ω(G) with a maximum clique.
InvariantWitness CliqueNumber(const InformationGraph& g, int cap = kDefaultGraphCap);

// α(G) with a maximum independent set, computed as ω of the complement.
InvariantWitness IndependenceNumber(const InformationGraph& g,
                                    int cap = kDefaultGraphCap);

// θ(G) with a minimum partition into cliques, computed as the chromatic
// number of the complement.
InvariantWitness CliqueCoverNumber(const InformationGraph& g,
                                   int cap = kDefaultGraphCap);

// Every maximum independent set, in lexicographic order.
std::vector<std::vector<int>> MaximumIndependentSets(const InformationGraph& g,
                                                     int cap = kDefaultGraphCap);

struct SiblingWitness {
  int w = 0;
  std::vector<int> independent_set;
  int member = 0;  // member of independent_set that lies in N_w
};

// Some maximum independent set I and vertex w with i ∈ N_w for an i ∈ I.
// Scans sets in lexicographic order, then w and i ascending.
std::optional<SiblingWitness> FindSibling(const InformationGraph& g,
                                          int cap = kDefaultGraphCap);

// α_p(G): largest J with |N_j ∩ J| < p for every j ∈ J.
InvariantWitness PseudoIndependenceNumber(const InformationGraph& g, int p,
                                          int cap = kDefaultGraphCap);

// Every maximum p-pseudo-independent set, in lexicographic order.
std::vector<std::vector<int>> MaximumPseudoIndependentSets(
    const InformationGraph& g, int p, int cap = kDefaultGraphCap);

struct PSiblingWitness {
  int w = 0;
  std::vector<int> pseudo_independent_set;
  std::vector<int> observed;  // N_w ∩ J, at least p members
};

std::optional<PSiblingWitness> FindPSibling(const InformationGraph& g, int p,
                                            int cap = kDefaultGraphCap);

enum class LemmaCheck { kHolds, kViolated, kNotApplicable };

// Without the p-sibling property, any two maximum p-pseudo-independent sets
// must intersect. kNotApplicable when G has the p-sibling property.
LemmaCheck VerifyNoDisjointMaxSets(const InformationGraph& g, int p,
                                   int cap = kDefaultGraphCap);

bool IsClique(const InformationGraph& g, const std::vector<int>& vertices);
bool IsIndependentSet(const InformationGraph& g, const std::vector<int>& vertices);
bool IsPseudoIndependent(const InformationGraph& g, const std::vector<int>& vertices,
                         int p);
bool IsCliqueCover(const InformationGraph& g,
                   const std::vector<std::vector<int>>& partition);

}  // namespace parsub

#endif  // PARSUB_GRAPHMETRICS_HPP_
