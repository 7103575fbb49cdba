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

#ifndef PARSUB_BOUNDS_HPP_
#define PARSUB_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parsub/graphmetrics.hpp"
#include "parsub/greedy.hpp"
#include "parsub/objective.hpp"
#include "parsub/rational.hpp"
#include "parsub/structure.hpp"

namespace parsub {

struct RatioBounds {
  Rational upper;
  Rational lower;
  // Present only when the sibling condition tightens the upper bound.
  std::optional<Rational> refined_upper;
  std::string source;
};

// Best competitive ratio with n agents and q iterations: 1/r when
// (n mod q) == (1 mod q), else 1/(r + 1), r = ⌈n/q⌉.
Rational Rho(int n, int q);

// upper = 1/α(G), lower = 1/(θ(G) + 1), refined_upper = 1/(α(G) + 1) when the
// sibling condition holds.
RatioBounds GraphRatioBounds(const InformationGraph& g, int cap = kDefaultGraphCap);

// For objectives with total curvature λ:
// upper = (α − (α − 1) λ) / α, lower = (θ − (θ − 1) λ) / (θ + λ).
// β-strict monotonicity is the same family with λ = 1 − β.
RatioBounds CurvatureGraphBounds(const InformationGraph& g, const Rational& lambda,
                                 int cap = kDefaultGraphCap);

// The same two formulas with α = θ = r = ⌈n/q⌉.
RatioBounds CurvatureEtaBounds(int n, int q, const Rational& lambda);

// Fewest edges of an n-vertex graph whose guarantee is at least 1/(k + 1):
// the edge count of k disjoint near-equal cliques. Requires n ≥ 1, k ≥ 2.
std::int64_t MinEdgesBound(int n, int k);

struct CertifyCase {
  std::string id;
  std::string graph_id;
  SetFunction f;
  AgentSpace x;
  InformationGraph g;
  // Set for witness instances: the ratio the construction must hit exactly.
  std::optional<Rational> predicted;
};

enum class Verdict { kPass, kFail, kError };

std::string_view VerdictName(Verdict v);

struct ReportRow {
  std::string id;
  std::string graph_id;
  std::optional<Rational> empirical;
  std::optional<Rational> curvature;
  std::optional<Rational> lower;
  // Informational: empirical ratios of a finite suite may exceed these.
  std::optional<Rational> upper;
  std::optional<Rational> refined_upper;
  std::optional<Rational> predicted;
  Verdict verdict = Verdict::kPass;
  std::string note;
};

struct BoundsReport {
  std::vector<ReportRow> rows;
  int failures = 0;
  int errors = 0;
  // Witness rows whose empirical ratio equals the informational upper bound.
  int witnesses_at_upper = 0;
};

struct CertifyOptions {
  int graph_cap = kDefaultGraphCap;
  int exhaustive_cap = kDefaultExhaustiveCap;
  long tie_node_cap = kDefaultTieNodeCap;
  long profile_cap = kDefaultProfileCap;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Per row: empirical ratio (worst greedy / brute-force optimum), total
// curvature when the ground set is within the exhaustive cap (λ = 1
// otherwise), and the curvature-form bounds for that λ. A row fails when
// empirical < lower, empirical > 1, the objective violates an axiom, or a
// witness misses its predicted ratio. Capacity problems mark the row as an
// error without stopping the suite. Rows keep input order.
BoundsReport Certify(const std::vector<CertifyCase>& suite,
                     const CertifyOptions& options = {});

}  // namespace parsub

#endif  // PARSUB_BOUNDS_HPP_
