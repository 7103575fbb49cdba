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
#include "parsub/errors.hpp"
#include "parsub/objective.hpp"
#include "parsub/suite.hpp"

namespace parsub {
namespace {

// y1 weighs 1, y2 weighs 2; a covers y1, b covers both.
SetFunction TwoTargetCover() {
  return SetFunction::Cover({"a", "b"}, {"y1", "y2"}, {Rational(1), Rational(2)},
                            {{"y1"}, {"y1", "y2"}});
}

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(ToString(R(2, 6)), "1/3");
  EXPECT_EQ(ToString(R(4, 2)), "2");
  EXPECT_EQ(ToString(R(-3, 4)), "-3/4");
}

TEST(Rational, ParsesAndRejects) {
  EXPECT_EQ(ParseRational("3/6"), R(1, 2));
  EXPECT_EQ(ParseRational("7"), R(7));
  EXPECT_EQ(ParseRational("-2/4"), R(-1, 2));
  EXPECT_THROW(ParseRational("1/0"), InputError);
  EXPECT_THROW(ParseRational("x"), InputError);
  EXPECT_THROW(ParseRational("1/"), InputError);
  EXPECT_THROW(ParseRational(""), InputError);
}

TEST(Rational, IntegerComparisonsTerminate) {
  EXPECT_TRUE(R(0) == 0);
  EXPECT_TRUE(0 == R(0));
  EXPECT_TRUE(R(1, 2) != 0);
  EXPECT_FALSE(R(3, 3) != 1);
  EXPECT_TRUE(R(1, 2) < 1);
}

TEST(Evaluate, EmptySetIsZero) {
  EXPECT_EQ(TwoTargetCover().Evaluate(ElementSet{0}), 0);
  const SetFunction w = SetFunction::CurvatureWitness({"u1", "v1"}, R(1, 2), 0b01, 0b10);
  EXPECT_EQ(w.Evaluate(ElementSet{0}), 0);
}

TEST(Evaluate, CoverUnion) {
  const SetFunction f = TwoTargetCover();
  const std::vector<std::string> ab = {"a", "b"};
  const std::vector<std::string> a = {"a"};
  EXPECT_EQ(f.Evaluate(ab), 3);
  EXPECT_EQ(f.Evaluate(a), 1);
}

TEST(Evaluate, UnknownIdIsInputError) {
  const std::vector<std::string> bad = {"zz"};
  EXPECT_THROW(TwoTargetCover().Evaluate(bad), InputError);
}

TEST(Evaluate, Deterministic) {
  const SetFunction f = TwoTargetCover();
  for (ElementSet s = 0; s < 4; ++s) EXPECT_EQ(f.Evaluate(s), f.Evaluate(s));
}

TEST(Marginal, Examples) {
  const SetFunction f = TwoTargetCover();
  const ElementSet a = Singleton(f.IndexOf("a"));
  const ElementSet b = Singleton(f.IndexOf("b"));
  for (ElementSet s = 0; s < 4; ++s) EXPECT_EQ(f.Marginal(0, s), 0);
  EXPECT_EQ(f.Marginal(a, b), 0);
  EXPECT_EQ(f.Marginal(b, 0), 3);
}

TEST(Tabular, RejectsWrongLengthAndNegative) {
  EXPECT_THROW(SetFunction::Tabular({"a", "b"}, {R(0), R(1), R(1)}), InputError);
  EXPECT_THROW(SetFunction::Tabular({"a"}, {R(0), R(-1)}), InputError);
}

TEST(Ground, RejectsDuplicateIds) {
  EXPECT_THROW(SetFunction::Tabular({"a", "a"}, {R(0), R(1), R(1), R(1)}), InputError);
}

TEST(CheckProperties, CoverIsSubmodular) {
  const PropertyReport r = CheckProperties(TwoTargetCover());
  EXPECT_TRUE(r.normalized);
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(r.submodular);
  ASSERT_TRUE(r.curvature.has_value());
}

TEST(CheckProperties, SupermodularPairWitness) {
  const SetFunction f = SetFunction::Tabular({"a", "b"}, {R(0), R(1), R(1), R(3)});
  const PropertyReport r = CheckProperties(f);
  EXPECT_TRUE(r.normalized);
  EXPECT_TRUE(r.monotone);
  EXPECT_FALSE(r.submodular);
  EXPECT_FALSE(r.curvature.has_value());
  const PropertyViolation* v = r.Find(PropertyViolation::Property::kSubmodular);
  ASSERT_NE(v, nullptr);
  ASSERT_TRUE(v->element.has_value());
  EXPECT_EQ(f.ground()[*v->element], "b");
  EXPECT_EQ(v->a, ElementSet{0});
  EXPECT_EQ(v->b, Singleton(f.IndexOf("a")));
  // The witness satisfies its own definition.
  EXPECT_LT(f.Marginal(Singleton(*v->element), v->a), f.Marginal(Singleton(*v->element), v->b));
  EXPECT_EQ(v->a & ~v->b, ElementSet{0});
}

TEST(CheckProperties, ZeroFunction) {
  const PropertyReport r =
      CheckProperties(SetFunction::Tabular({"a", "b"}, {R(0), R(0), R(0), R(0)}));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(*r.curvature, 0);
}

TEST(CheckProperties, DetectsNonNormalizedAndNonMonotone) {
  const PropertyReport r1 = CheckProperties(SetFunction::Tabular({"a"}, {R(1), R(2)}));
  EXPECT_FALSE(r1.normalized);
  const PropertyReport r2 = CheckProperties(SetFunction::Tabular({"a", "b"}, {R(0), R(2), R(1), R(1)}));
  EXPECT_FALSE(r2.monotone);
  ASSERT_NE(r2.Find(PropertyViolation::Property::kMonotone), nullptr);
}

TEST(CheckProperties, CapacityErrorAboveCap) {
  std::vector<std::string> ground;
  std::vector<std::vector<std::string>> coverage;
  for (int k = 0; k < 17; ++k) {
    ground.push_back("e" + std::to_string(k));
    coverage.push_back({"y"});
  }
  const SetFunction f = SetFunction::Cover(ground, {"y"}, {R(1)}, coverage);
  EXPECT_THROW(CheckProperties(f), CapacityError);
  EXPECT_NO_THROW(CheckProperties(f, 17));
}

TEST(TotalCurvature, Examples) {
  const SetFunction modular =
      SetFunction::Cover({"a", "b"}, {"y1", "y2"}, {R(1), R(5)}, {{"y1"}, {"y2"}});
  EXPECT_EQ(TotalCurvature(modular), 0);
  const SetFunction capped = SetFunction::Cover({"a", "b", "c"}, {"y"}, {R(1)},
                                                {{"y"}, {"y"}, {"y"}});
  EXPECT_EQ(TotalCurvature(capped), 1);
  const SetFunction witness = SetFunction::CurvatureWitness(
      {"u1", "u2", "u3", "v1", "v2", "v3"}, R(1, 2), 0b000111, 0b111000);
  EXPECT_EQ(TotalCurvature(witness), R(1, 2));
}

TEST(TotalCurvature, RequiresAxioms) {
  EXPECT_THROW(TotalCurvature(SetFunction::Tabular({"a", "b"}, {R(0), R(1), R(1), R(3)})),
               InputError);
}

TEST(AgentSpace, PartitionChecks) {
  const SetFunction f = TwoTargetCover();
  EXPECT_NO_THROW(AgentSpace(f, {0b01, 0b10}));
  EXPECT_NO_THROW(AgentSpace(f, {0b11, 0}));
  try {
    AgentSpace(f, {0b11, 0b01});
    FAIL() << "overlap accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("partition"), std::string::npos);
  }
  EXPECT_THROW(AgentSpace(f, {0b01}), InputError);
}

// Every generated objective satisfies the axioms, and the exhaustive
// single-step check agrees with the full (e, A ⊆ B) enumeration.
TEST(Properties, GeneratedCoversAgreeWithFullEnumeration) {
  Rng rng(7);
  RandomCoverOptions opts;
  opts.max_ground = 8;
  for (int k = 0; k < 60; ++k) {
    const auto [f, x] = RandomCoverInstance(rng, 1 + k % 4, opts);
    const PropertyReport r = CheckProperties(f);
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(oracle::FullySubmodular(f));
    EXPECT_TRUE(oracle::FullyMonotone(f));
    EXPECT_EQ(*r.curvature, oracle::Curvature(f));
  }
}

TEST(Properties, RandomTablesAgreeWithFullEnumeration) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const int m = 1 + k % 4;
    std::vector<std::string> ground;
    for (int e = 0; e < m; ++e) ground.push_back("e" + std::to_string(e));
    std::vector<Rational> values(std::size_t{1} << m);
    for (std::size_t s = 1; s < values.size(); ++s) values[s] = Rational(Draw(rng, 0, 4));
    const SetFunction f = SetFunction::Tabular(ground, values);
    const PropertyReport r = CheckProperties(f);
    if (r.normalized && r.monotone) EXPECT_EQ(r.submodular, oracle::FullySubmodular(f));
    EXPECT_EQ(r.monotone, oracle::FullyMonotone(f));
    if (r.ok()) EXPECT_EQ(*r.curvature, oracle::Curvature(f));
  }
}

TEST(Properties, CurvatureDefinitionIsTight) {
  Rng rng(3);
  RandomCoverOptions opts;
  opts.max_ground = 6;
  for (int k = 0; k < 30; ++k) {
    const auto [f, x] = RandomCoverInstance(rng, 3, opts);
    const Rational lambda = TotalCurvature(f);
    bool attained = false;
    bool any_positive = false;
    for (int e = 0; e < f.size(); ++e) {
      const Rational single = f.Evaluate(Singleton(e));
      if (single == 0) continue;
      any_positive = true;
      for (ElementSet a = 0; a <= f.full_set(); ++a) {
        if (Contains(a, e)) continue;
        const Rational gain = f.Marginal(Singleton(e), a);
        EXPECT_GE(gain, (1 - lambda) * single);
        if (gain == (1 - lambda) * single) attained = true;
      }
    }
    EXPECT_TRUE(attained || !any_positive);
  }
}

}  // namespace
}  // namespace parsub
