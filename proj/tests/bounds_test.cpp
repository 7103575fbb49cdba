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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "parsub/bounds.hpp"
#include "parsub/errors.hpp"
#include "parsub/graphmetrics.hpp"
#include "parsub/structure.hpp"
#include "parsub/suite.hpp"

namespace parsub {
namespace {

TEST(Rho, Examples) {
  EXPECT_EQ(Rho(5, 2), Rational(1, 3));
  EXPECT_EQ(Rho(5, 3), Rational(1, 3));
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(Rho(n, n), Rational(1, 2));
  EXPECT_EQ(Rho(1, 1), 1);
  EXPECT_THROW(Rho(2, 3), InputError);
}

TEST(Rho, TakesOneOfTwoValues) {
  for (int n = 1; n <= 12; ++n) {
    for (int q = 1; q <= n; ++q) {
      const int r = (n + q - 1) / q;
      const Rational rho = Rho(n, q);
      EXPECT_TRUE(rho == Rational(1, r) || rho == Rational(1, r + 1));
      EXPECT_EQ(rho == Rational(1, r), n % q == 1 % q);
    }
  }
}

TEST(GraphRatioBounds, Examples) {
  const RatioBounds ct = GraphRatioBounds(ComplementTuran(5, 2));
  EXPECT_EQ(ct.upper, Rational(1, 2));
  EXPECT_EQ(ct.lower, Rational(1, 3));
  EXPECT_EQ(ct.refined_upper, Rational(1, 3));
  EXPECT_FALSE(ct.source.empty());
  const RatioBounds e = GraphRatioBounds(InformationGraph::Edgeless(4));
  EXPECT_EQ(e.upper, Rational(1, 4));
  EXPECT_EQ(e.lower, Rational(1, 5));
  EXPECT_FALSE(e.refined_upper.has_value());
  const RatioBounds k = GraphRatioBounds(InformationGraph::Complete(4));
  EXPECT_EQ(k.upper, 1);
  EXPECT_EQ(k.lower, Rational(1, 2));
}

TEST(GraphRatioBounds, OrderedOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    oracle::ForEachGraph(n, [](const InformationGraph& g) {
      const RatioBounds b = GraphRatioBounds(g);
      EXPECT_LE(b.lower, b.upper);
      if (b.refined_upper) {
        EXPECT_LE(*b.refined_upper, b.upper);
        EXPECT_LE(b.lower, *b.refined_upper);
      }
    });
  }
}

TEST(GraphRatioBounds, OptimalGraphsMeetRho) {
  for (int n = 1; n <= 12; ++n) {
    for (int q = 1; q <= n; ++q) {
      const RatioBounds b = GraphRatioBounds(OptimalGraph(n, q));
      if (IsOneModQ(n, q)) {
        EXPECT_EQ(b.upper, Rho(n, q)) << n << "," << q;
      } else {
        EXPECT_EQ(b.lower, Rho(n, q)) << n << "," << q;
      }
    }
  }
}

// No feasible graph guarantees more than rho(n, q).
TEST(GraphRatioBounds, NoFeasibleGraphBeatsRho) {
  for (int n = 1; n <= 6; ++n) {
    oracle::ForEachGraph(n, [n](const InformationGraph& g) {
      const int depth = EarliestSchedule(g).depth;
      const RatioBounds b = GraphRatioBounds(g);
      for (int q = depth; q <= n; ++q) EXPECT_LE(b.lower, Rho(n, q));
    });
  }
}

TEST(CurvatureGraphBounds, Examples) {
  const InformationGraph g = ComplementTuran(6, 3);
  const RatioBounds one = CurvatureGraphBounds(g, Rational(1));
  EXPECT_EQ(one.upper, Rational(1, 3));
  EXPECT_EQ(one.lower, Rational(1, 4));
  const RatioBounds zero = CurvatureGraphBounds(g, Rational(0));
  EXPECT_EQ(zero.upper, 1);
  EXPECT_EQ(zero.lower, 1);
  const RatioBounds half = CurvatureGraphBounds(g, Rational(1, 2));
  EXPECT_EQ(half.upper, Rational(2, 3));
  EXPECT_EQ(half.lower, Rational(4, 7));
  EXPECT_THROW(CurvatureGraphBounds(g, Rational(2)), InputError);
}

// β = 1 − λ reproduces ((θ−1)β+1)/(θ−β+1).
TEST(CurvatureGraphBounds, StrictMonotoneForm) {
  for (int theta = 1; theta <= 6; ++theta) {
    const InformationGraph g = ComplementTuran(theta, theta);
    for (int k = 0; k <= 8; ++k) {
      const Rational beta(k, 8);
      EXPECT_EQ(CurvatureGraphBounds(g, 1 - beta).lower,
                ((theta - 1) * beta + 1) / (theta - beta + 1));
    }
  }
}

TEST(CurvatureEtaBounds, Examples) {
  for (int n = 1; n <= 12; ++n) {
    for (int q = 1; q <= n; ++q) {
      const int r = (n + q - 1) / q;
      EXPECT_EQ(CurvatureEtaBounds(n, q, Rational(1)).lower, Rational(1, r + 1));
      const RatioBounds zero = CurvatureEtaBounds(n, q, Rational(0));
      EXPECT_EQ(zero.upper, 1);
      EXPECT_EQ(zero.lower, 1);
    }
  }
  const RatioBounds b = CurvatureEtaBounds(20, 1, Rational(1, 2));
  EXPECT_LE(abs(b.upper - Rational(1, 2)), Rational(1, 40));
  EXPECT_LE(abs(b.lower - Rational(1, 2)), Rational(1, 40));
}

TEST(MinEdgesBound, Examples) {
  EXPECT_EQ(MinEdgesBound(5, 2), 4);
  EXPECT_EQ(MinEdgesBound(6, 3), 3);
  for (int k = 2; k <= 10; ++k) EXPECT_EQ(MinEdgesBound(k, k), 0);
  EXPECT_THROW(MinEdgesBound(5, 1), InputError);
}

TEST(MinEdgesBound, MatchesComplementTuran) {
  for (int n = 1; n <= 30; ++n) {
    for (int k = 2; k <= n; ++k) {
      EXPECT_EQ(MinEdgesBound(n, k), ComplementTuran(n, k).edge_count()) << n << "," << k;
    }
  }
}

TEST(Certify, EmptySuite) {
  const BoundsReport r = Certify({});
  EXPECT_TRUE(r.rows.empty());
  EXPECT_EQ(r.failures, 0);
  EXPECT_EQ(r.errors, 0);
}

TEST(Certify, WitnessSuitePasses) {
  const BoundsReport r = Certify(WitnessSuite(
      4, {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}));
  EXPECT_EQ(r.failures, 0);
  EXPECT_EQ(r.errors, 0);
  EXPECT_GT(r.witnesses_at_upper, 0);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.verdict, Verdict::kPass) << row.id << " " << row.note;
    EXPECT_EQ(row.empirical, row.predicted) << row.id;
  }
}

TEST(Certify, RandomSuiteHasNoLowerBoundViolations) {
  const auto suite = RandomCoverSuite(42, 200, 6, true);
  const BoundsReport r = Certify(suite);
  EXPECT_EQ(r.failures, 0);
  for (const auto& row : r.rows) {
    if (row.verdict != Verdict::kPass) continue;
    ASSERT_TRUE(row.empirical && row.lower);
    EXPECT_GE(*row.empirical, *row.lower);
  }
}

TEST(Certify, RowsKeepInputOrderAcrossThreadCounts) {
  const auto suite = RandomCoverSuite(5, 40, 5, false);
  CertifyOptions one;
  one.threads = 1;
  CertifyOptions many;
  many.threads = 8;
  const BoundsReport a = Certify(suite, one);
  const BoundsReport b = Certify(suite, many);
  ASSERT_EQ(a.rows.size(), suite.size());
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    EXPECT_EQ(a.rows[k].id, suite[k].id);
    EXPECT_EQ(a.rows[k].id, b.rows[k].id);
    EXPECT_EQ(a.rows[k].empirical, b.rows[k].empirical);
    EXPECT_EQ(a.rows[k].verdict, b.rows[k].verdict);
  }
}

TEST(Certify, FlagsWrongPredictionAndBadObjective) {
  auto suite = WitnessSuite(2, {Rational(1, 2)});
  suite.erase(suite.begin() + 1, suite.end());
  suite[0].predicted = Rational(1, 7);
  BoundsReport r = Certify(suite);
  EXPECT_EQ(r.failures, 1);
  EXPECT_EQ(r.rows[0].verdict, Verdict::kFail);

  const SetFunction f = SetFunction::Tabular({"a", "b"}, {Rational(0), Rational(1), Rational(1),
                                                          Rational(3)});
  std::vector<CertifyCase> bad;
  bad.push_back(CertifyCase{"super", "edgeless(2)", f, AgentSpace(f, {0b01, 0b10}),
                            InformationGraph::Edgeless(2), std::nullopt});
  r = Certify(bad);
  EXPECT_EQ(r.failures, 1);
}

TEST(Certify, CapacityErrorsStayInTheirRow) {
  auto suite = WitnessSuite(1, {Rational(1)});
  CertifyOptions tight;
  tight.profile_cap = 1;
  const BoundsReport r = Certify(suite, tight);
  EXPECT_EQ(r.rows.size(), suite.size());
  EXPECT_GT(r.errors, 0);
  for (const auto& row : r.rows) {
    if (row.verdict == Verdict::kError) EXPECT_FALSE(row.note.empty());
  }
}

TEST(Suite, SeededGenerationIsReproducible) {
  const auto a = RandomCoverSuite(9, 30, 6, false);
  const auto b = RandomCoverSuite(9, 30, 6, false);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].id, b[k].id);
    EXPECT_EQ(a[k].g, b[k].g);
    EXPECT_EQ(a[k].x.all(), b[k].x.all());
    EXPECT_EQ(a[k].f.ground(), b[k].f.ground());
    for (ElementSet s = 0; s <= a[k].f.full_set(); ++s) {
      EXPECT_EQ(a[k].f.Evaluate(s), b[k].f.Evaluate(s));
    }
  }
}

TEST(Suite, RandomAssignmentsAreValid) {
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const int n = Draw(rng, 1, 10);
    const int q = Draw(rng, 1, n);
    EXPECT_FALSE(ValidateAssignment(RandomAssignment(rng, n, q)).has_value());
    EXPECT_TRUE(IsFeasible(RandomFeasibleGraph(rng, n, q), q));
  }
}

}  // namespace
}  // namespace parsub
