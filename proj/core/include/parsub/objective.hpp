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

#ifndef PARSUB_OBJECTIVE_HPP_
#define PARSUB_OBJECTIVE_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "parsub/rational.hpp"

namespace parsub {

// A subset of a ground set, bit k standing for ground element k.
using ElementSet = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;
inline constexpr int kMaxTabularGroundSize = 20;
inline constexpr int kDefaultExhaustiveCap = 16;

inline ElementSet Singleton(int element) { return ElementSet{1} << element; }
inline bool Contains(ElementSet set, int element) {
  return (set >> element) & 1u;
}
inline int Cardinality(ElementSet set) { return std::popcount(set); }

// Element indices of `set`, ascending.
std::vector<int> Members(ElementSet set);

enum class ObjectiveKind { kTabular, kCover, kCurvatureWitness, kPAdditiveWitness };

std::string_view KindName(ObjectiveKind kind);

struct TabularPayload {
  // values[mask] = f(mask); size 2^|ground|.
  std::vector<Rational> values;
};

struct CoverPayload {
  std::vector<std::string> targets;
  std::vector<Rational> weights;
  // coverage[k] = targets covered by ground element k, as a bitmask over
  // `targets`.
  std::vector<std::uint64_t> coverage;
};

// f(x) = min(1, |x ∩ U|) λ + |x ∩ U| (1 − λ) + |x ∩ V|
struct CurvatureWitnessPayload {
  Rational lambda;
  ElementSet u = 0;
  ElementSet v = 0;
};

// f(x) = min(1, |x ∩ U| / p) + |x ∩ V| / p. Elements outside U ∪ V are
// worthless.
struct PAdditiveWitnessPayload {
  int p = 1;
  ElementSet u = 0;
  ElementSet v = 0;
};

using ObjectivePayload = std::variant<TabularPayload, CoverPayload,
                                      CurvatureWitnessPayload,
                                      PAdditiveWitnessPayload>;

// A normalized monotone set function over an ordered ground set of at most
// kMaxGroundSize elements. Immutable once built; every evaluation is an exact
// nonnegative rational.
class SetFunction {
 public:
  static SetFunction Tabular(std::vector<std::string> ground,
                             std::vector<Rational> values);
  // `coverage` is indexed like `ground` and lists target ids.
  static SetFunction Cover(std::vector<std::string> ground,
                           std::vector<std::string> targets,
                           std::vector<Rational> weights,
                           const std::vector<std::vector<std::string>>& coverage);
  static SetFunction CurvatureWitness(std::vector<std::string> ground,
                                      Rational lambda, ElementSet u,
                                      ElementSet v);
  static SetFunction PAdditiveWitness(std::vector<std::string> ground, int p,
                                      ElementSet u, ElementSet v);

  ObjectiveKind kind() const;
  const ObjectivePayload& payload() const { return payload_; }
  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  ElementSet full_set() const;

  // Throws InputError for ids outside the ground set.
  int IndexOf(std::string_view id) const;
  ElementSet SetOf(std::span<const std::string> ids) const;

  Rational Evaluate(ElementSet set) const;
  Rational Evaluate(std::span<const std::string> ids) const;
  // f(A | B) = f(A ∪ B) − f(B).
  Rational Marginal(ElementSet a, ElementSet b) const;

 private:
  SetFunction(std::vector<std::string> ground, ObjectivePayload payload);
  void CheckSubset(ElementSet set) const;

  std::vector<std::string> ground_;
  std::unordered_map<std::string, int> index_;
  ObjectivePayload payload_;
};

// Per-agent decision sets X_1..X_n. Non-empty decision sets partition the
// ground set; an empty X_i means agent i can only take the null decision.
class AgentSpace {
 public:
  // decisions[k] belongs to agent k + 1. Throws InputError naming the
  // "partition" invariant when sets overlap or miss an element.
  AgentSpace(const SetFunction& f, std::vector<ElementSet> decisions);
  static AgentSpace FromIds(const SetFunction& f,
                            const std::vector<std::vector<std::string>>& ids);

  int n() const { return static_cast<int>(decisions_.size()); }
  int ground_size() const { return ground_size_; }
  // 1-based agent index.
  ElementSet decisions(int agent) const { return decisions_.at(agent - 1); }
  const std::vector<ElementSet>& all() const { return decisions_; }

 private:
  int ground_size_ = 0;
  std::vector<ElementSet> decisions_;
};

struct PropertyViolation {
  enum class Property { kNormalized, kMonotone, kSubmodular };
  Property property;
  std::optional<int> element;
  ElementSet a = 0;
  ElementSet b = 0;
};

struct PropertyReport {
  bool normalized = true;
  bool monotone = true;
  bool submodular = true;
  // Filled only when all three axioms hold.
  std::optional<Rational> curvature;
  // At most one entry per failed property: the first violation found.
  std::vector<PropertyViolation> counterexamples;

  bool ok() const { return normalized && monotone && submodular; }
  const PropertyViolation* Find(PropertyViolation::Property p) const;
};

// Exhaustive verification of normalization, monotonicity and submodularity.
// Submodularity is checked through the equivalent single-step form
// f(e | B∖{x}) ≥ f(e | B), enumerated by ascending B, so a reported witness
// always has B = A ∪ {x}. Throws CapacityError when |ground| > cap.
PropertyReport CheckProperties(const SetFunction& f,
                               int cap = kDefaultExhaustiveCap);

// Smallest λ with f(e | A) ≥ (1 − λ) f(e) for every e with f(e) > 0 and
// A ⊆ S∖{e}; 0 when no element has positive value. Throws InputError if f
// fails CheckProperties and CapacityError above the cap.
Rational TotalCurvature(const SetFunction& f, int cap = kDefaultExhaustiveCap);

// Evaluations of f on every subset, indexed by mask.
std::vector<Rational> ValueTable(const SetFunction& f, int cap);

}  // namespace parsub

#endif  // PARSUB_OBJECTIVE_HPP_
