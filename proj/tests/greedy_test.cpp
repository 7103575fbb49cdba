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
#include "parsub/adversarial.hpp"
#include "parsub/errors.hpp"
#include "parsub/graphmetrics.hpp"
#include "parsub/greedy.hpp"
#include "parsub/structure.hpp"
#include "parsub/suite.hpp"

namespace parsub {
namespace {

struct Fixture {
  SetFunction f;
  AgentSpace x;
};

// a → {y1}, b → {y2}, b' → {y2}, unit weights; agents {a, b} and {b'}.
Fixture HalfCover() {
  SetFunction f = SetFunction::Cover({"a", "b", "b'"}, {"y1", "y2"}, {Rational(1), Rational(1)},
                                     {{"y1"}, {"y2"}, {"y2"}});
  AgentSpace x = AgentSpace::FromIds(f, {{"a", "b"}, {"b'"}});
  return {std::move(f), std::move(x)};
}

std::string Chosen(const SetFunction& f, const Profile& profile, int agent) {
  return profile[agent - 1] ? f.ground()[*profile[agent - 1]] : "-";
}

TEST(RunGreedy, WorstAndBestOnTheEdge) {
  const auto [f, x] = HalfCover();
  const InformationGraph g = InformationGraph::Complete(2);
  const GreedyOutcome worst = RunGreedy(f, x, g, TiePolicy::kWorst);
  EXPECT_EQ(Chosen(f, worst.profile, 1), "b");
  EXPECT_EQ(worst.value, 1);
  EXPECT_EQ(worst.per_agent_marginal, (std::vector<Rational>{Rational(1), Rational(0)}));
  EXPECT_EQ(worst.resolutions_explored, 2);
  const GreedyOutcome best = RunGreedy(f, x, g, TiePolicy::kBest);
  EXPECT_EQ(Chosen(f, best.profile, 1), "a");
  EXPECT_EQ(Chosen(f, best.profile, 2), "b'");
  EXPECT_EQ(best.value, 2);
}

TEST(RunGreedy, FirstAndLast) {
  const auto [f, x] = HalfCover();
  const InformationGraph g = InformationGraph::Complete(2);
  EXPECT_EQ(RunGreedy(f, x, g, TiePolicy::kFirst).value, 2);
  EXPECT_EQ(RunGreedy(f, x, g, TiePolicy::kLast).value, 1);
}

TEST(RunGreedy, AllIsDeduplicatedBySet) {
  const auto [f, x] = HalfCover();
  const auto all = RunGreedyAll(f, x, InformationGraph::Complete(2));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_NE(all[0].chosen(), all[1].chosen());
  EXPECT_THROW(RunGreedy(f, x, InformationGraph::Complete(2), TiePolicy::kAll), InputError);
}

TEST(RunGreedy, SingleAgent) {
  const SetFunction f = SetFunction::Cover({"a"}, {"y"}, {Rational(5)}, {{"y"}});
  const AgentSpace x = AgentSpace::FromIds(f, {{"a"}});
  for (TiePolicy p : {TiePolicy::kFirst, TiePolicy::kLast, TiePolicy::kWorst, TiePolicy::kBest}) {
    const GreedyOutcome o = RunGreedy(f, x, InformationGraph::Edgeless(1), p);
    EXPECT_EQ(Chosen(f, o.profile, 1), "a");
    EXPECT_EQ(o.value, 5);
  }
}

TEST(RunGreedy, EmptyAgentsTakeNull) {
  const SetFunction f = SetFunction::Cover({"a"}, {"y"}, {Rational(1)}, {{"y"}});
  const AgentSpace x(f, {0, Singleton(0), 0});
  const GreedyOutcome o = RunGreedy(f, x, InformationGraph::Complete(3), TiePolicy::kWorst);
  EXPECT_FALSE(o.profile[0].has_value());
  EXPECT_TRUE(o.profile[1].has_value());
  EXPECT_FALSE(o.profile[2].has_value());
  EXPECT_EQ(o.per_agent_marginal[0], 0);
  EXPECT_EQ(o.schedule.depth, 3);
}

TEST(RunGreedy, DimensionMismatch) {
  const auto [f, x] = HalfCover();
  EXPECT_THROW(RunGreedy(f, x, InformationGraph::Complete(3), TiePolicy::kWorst), InputError);
}

TEST(RunGreedy, TieNodeCap) {
  const WitnessInstance w = CurvatureWitness(InformationGraph::Edgeless(10), Rational(1));
  EXPECT_THROW(RunGreedy(w.f, w.x, w.g, TiePolicy::kWorst, 5), CapacityError);
}

TEST(BruteForceOptimum, Examples) {
  const auto [f, x] = HalfCover();
  const Optimum opt = BruteForceOptimum(f, x);
  EXPECT_EQ(opt.value, 2);
  EXPECT_EQ(Chosen(f, opt.profile, 1), "a");
  EXPECT_EQ(Chosen(f, opt.profile, 2), "b'");

  const SetFunction g = SetFunction::Cover({"a"}, {"y"}, {Rational(1)}, {{"y"}});
  EXPECT_EQ(BruteForceOptimum(g, AgentSpace(g, {Singleton(0), 0, 0})).value, 1);

  const WitnessInstance w = CurvatureWitness(InformationGraph::Edgeless(3), Rational(1, 2));
  EXPECT_EQ(BruteForceOptimum(w.f, w.x).value, 3);
  EXPECT_THROW(BruteForceOptimum(w.f, w.x, 7), CapacityError);
}

TEST(EmpiricalRatio, Examples) {
  const auto [f, x] = HalfCover();
  EXPECT_EQ(EmpiricalRatio(f, x, InformationGraph::Complete(2)), Rational(1, 2));

  const SetFunction single = SetFunction::Cover({"a", "b", "c"}, {"y", "z"},
                                                {Rational(1), Rational(2)},
                                                {{"y"}, {"y", "z"}, {"z"}});
  const AgentSpace singles = AgentSpace::FromIds(single, {{"a"}, {"b"}, {"c"}});
  EXPECT_EQ(EmpiricalRatio(single, singles, InformationGraph::Complete(3)), 1);

  const WitnessInstance w = CurvatureWitness(InformationGraph::Edgeless(3), Rational(1, 2));
  EXPECT_EQ(EmpiricalRatio(w.f, w.x, w.g), Rational(2, 3));
}

TEST(EmpiricalRatio, ZeroOptimumIsUndefined) {
  const SetFunction f = SetFunction::Tabular({"a"}, {Rational(0), Rational(0)});
  const AgentSpace x = AgentSpace::FromIds(f, {{"a"}});
  EXPECT_THROW(EmpiricalRatio(f, x, InformationGraph::Edgeless(1)), UndefinedRatioError);
}

TEST(PolicyNames, RoundTrip) {
  for (TiePolicy p : {TiePolicy::kFirst, TiePolicy::kLast, TiePolicy::kWorst, TiePolicy::kBest,
                      TiePolicy::kAll}) {
    EXPECT_EQ(ParsePolicy(PolicyName(p)), p);
  }
  EXPECT_FALSE(ParsePolicy("median").has_value());
}

// Each chosen decision maximizes its marginal against the visible choices.
void ExpectArgmaxConsistent(const SetFunction& f, const AgentSpace& x, const InformationGraph& g,
                            const GreedyOutcome& o) {
  ElementSet running = 0;
  Rational last(0);
  for (int i = 1; i <= x.n(); ++i) {
    ElementSet seen = 0;
    for (int j : g.InNeighbors(i)) {
      if (o.profile[j - 1]) seen |= Singleton(*o.profile[j - 1]);
    }
    if (o.profile[i - 1]) {
      const Rational gain = f.Marginal(Singleton(*o.profile[i - 1]), seen);
      for (int d : Members(x.decisions(i))) EXPECT_GE(gain, f.Marginal(Singleton(d), seen));
      running |= Singleton(*o.profile[i - 1]);
    }
    const Rational now = f.Evaluate(running);
    EXPECT_GE(now, last);
    last = now;
  }
  EXPECT_EQ(o.value, f.Evaluate(o.chosen()));
  EXPECT_EQ(o.value, last);
}

TEST(Properties, TieTreeMatchesPathEnumeration) {
  Rng rng(1234);
  RandomCoverOptions opts;
  opts.max_weight = 2;
  for (int k = 0; k < 300; ++k) {
    const int n = Draw(rng, 1, 6);
    const auto [f, x] = RandomCoverInstance(rng, n, opts);
    const InformationGraph g = RandomFeasibleGraph(rng, n, Draw(rng, 1, n));
    const std::set<ElementSet> paths = oracle::TiePaths(f, x, g);
    const auto all = RunGreedyAll(f, x, g);
    std::set<ElementSet> sets;
    for (const auto& o : all) {
      sets.insert(o.chosen());
      ExpectArgmaxConsistent(f, x, g, o);
    }
    ASSERT_EQ(sets, paths);
    ASSERT_EQ(all.size(), paths.size());

    const GreedyOutcome worst = RunGreedy(f, x, g, TiePolicy::kWorst);
    EXPECT_EQ(worst.value, oracle::WorstGreedyValue(f, x, g));
    EXPECT_EQ(worst.resolutions_explored, static_cast<long>(paths.size()));
    ExpectArgmaxConsistent(f, x, g, worst);
    const GreedyOutcome best = RunGreedy(f, x, g, TiePolicy::kBest);
    for (ElementSet s : paths) {
      EXPECT_LE(worst.value, f.Evaluate(s));
      EXPECT_GE(best.value, f.Evaluate(s));
    }
    for (TiePolicy p : {TiePolicy::kFirst, TiePolicy::kLast}) {
      const GreedyOutcome o = RunGreedy(f, x, g, p);
      EXPECT_TRUE(paths.count(o.chosen()));
      ExpectArgmaxConsistent(f, x, g, o);
    }
  }
}

TEST(Properties, OptimumMatchesOracle) {
  Rng rng(77);
  for (int k = 0; k < 200; ++k) {
    const auto [f, x] = RandomCoverInstance(rng, Draw(rng, 1, 6));
    const Optimum opt = BruteForceOptimum(f, x);
    EXPECT_EQ(opt.value, oracle::OptimumValue(f, x));
    ElementSet s = 0;
    for (const auto& d : opt.profile) {
      if (d) s |= Singleton(*d);
    }
    EXPECT_EQ(f.Evaluate(s), opt.value);
  }
}

TEST(Properties, ParallelGreedyEqualsInducedGraphGreedy) {
  Rng rng(555);
  for (int k = 0; k < 300; ++k) {
    const int n = Draw(rng, 1, 6);
    const int q = Draw(rng, 1, n);
    const auto [f, x] = RandomCoverInstance(rng, n);
    const IterationAssignment p = RandomAssignment(rng, n, q);
    const InformationGraph g = InducedGraph(p);
    for (TiePolicy policy : {TiePolicy::kFirst, TiePolicy::kLast, TiePolicy::kWorst,
                             TiePolicy::kBest}) {
      const GreedyOutcome direct = RunParallelGreedy(f, x, p, policy);
      const GreedyOutcome general = RunGreedy(f, x, g, policy);
      ASSERT_EQ(direct.profile, general.profile);
      ASSERT_EQ(direct.value, general.value);
      ASSERT_EQ(direct.per_agent_marginal, general.per_agent_marginal);
    }
  }
}

TEST(Properties, LowerBoundAndSequentialTightness) {
  Rng rng(31);
  for (int k = 0; k < 300; ++k) {
    const int n = Draw(rng, 1, 6);
    const auto [f, x] = RandomCoverInstance(rng, n);
    if (BruteForceOptimum(f, x).value == 0) continue;
    const InformationGraph g = RandomFeasibleGraph(rng, n, Draw(rng, 1, n));
    const int theta = CliqueCoverNumber(g).value;
    EXPECT_GE(EmpiricalRatio(f, x, g), Rational(1, theta + 1));
    EXPECT_GE(EmpiricalRatio(f, x, InformationGraph::Complete(n)), Rational(1, 2));
  }
}

TEST(Properties, TelescopingChainOnOptimalGraphs) {
  Rng rng(8);
  for (int n = 1; n <= 7; ++n) {
    for (int q = 1; q <= n; ++q) {
      if (!IsOneModQ(n, q)) continue;
      const InformationGraph g = OptimalGraph(n, q);
      const int r = BlockSize(n, q);
      for (int k = 0; k < 20; ++k) {
        const auto [f, x] = RandomCoverInstance(rng, n);
        const Rational sol = RunGreedy(f, x, g, TiePolicy::kWorst).value;
        EXPECT_LE(BruteForceOptimum(f, x).value, r * sol);
      }
    }
  }
}

}  // namespace
}  // namespace parsub
