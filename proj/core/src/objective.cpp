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

#include "parsub/objective.hpp"

#include <algorithm>
#include <utility>

#include "parsub/errors.hpp"

namespace parsub {
namespace {

void RequireNonNegative(const Rational& value, const std::string& field) {
  if (value < 0) {
    throw InputError(field + ": value " + ToString(value) + " is negative");
  }
}

void RequireWithinGround(ElementSet set, int ground_size,
                         const std::string& field) {
  if (ground_size < kMaxGroundSize && (set >> ground_size) != 0) {
    throw InputError(field + ": element outside the ground set");
  }
}

}  // namespace

std::vector<int> Members(ElementSet set) {
  std::vector<int> out;
  out.reserve(Cardinality(set));
  while (set != 0) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

std::string_view KindName(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kTabular:
      return "tabular";
    case ObjectiveKind::kCover:
      return "cover";
    case ObjectiveKind::kCurvatureWitness:
      return "curvature-witness";
    case ObjectiveKind::kPAdditiveWitness:
      return "p-additive-witness";
  }
  return "unknown";
}

SetFunction::SetFunction(std::vector<std::string> ground,
                         ObjectivePayload payload)
    : ground_(std::move(ground)), payload_(std::move(payload)) {
  if (ground_.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw CapacityError("ground: " + std::to_string(ground_.size()) +
                        " elements exceeds the limit of " +
                        std::to_string(kMaxGroundSize));
  }
  for (std::size_t k = 0; k < ground_.size(); ++k) {
    if (!index_.emplace(ground_[k], static_cast<int>(k)).second) {
      throw InputError("ground: duplicate element id '" + ground_[k] + "'");
    }
  }
}

SetFunction SetFunction::Tabular(std::vector<std::string> ground,
                                 std::vector<Rational> values) {
  if (ground.size() > static_cast<std::size_t>(kMaxTabularGroundSize)) {
    throw CapacityError("objective.values: tabular objectives are limited to " +
                        std::to_string(kMaxTabularGroundSize) + " elements");
  }
  const std::size_t expected = std::size_t{1} << ground.size();
  if (values.size() != expected) {
    throw InputError("objective.values: expected " + std::to_string(expected) +
                     " entries (one per subset), got " +
                     std::to_string(values.size()));
  }
  for (std::size_t m = 0; m < values.size(); ++m) {
    RequireNonNegative(values[m],
                       "objective.values[" + std::to_string(m) + "]");
  }
  return SetFunction(std::move(ground), TabularPayload{std::move(values)});
}

SetFunction SetFunction::Cover(
    std::vector<std::string> ground, std::vector<std::string> targets,
    std::vector<Rational> weights,
    const std::vector<std::vector<std::string>>& coverage) {
  if (targets.size() > 64) {
    throw CapacityError("objective.targets: at most 64 targets are supported");
  }
  if (weights.size() != targets.size()) {
    throw InputError("objective.weights: expected " +
                     std::to_string(targets.size()) + " weights, got " +
                     std::to_string(weights.size()));
  }
  if (coverage.size() != ground.size()) {
    throw InputError("objective.coverage: expected one entry per ground element");
  }
  std::unordered_map<std::string, int> target_index;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (!target_index.emplace(targets[t], static_cast<int>(t)).second) {
      throw InputError("objective.targets: duplicate target id '" +
                       targets[t] + "'");
    }
    RequireNonNegative(weights[t], "objective.weights[" + std::to_string(t) + "]");
  }
  CoverPayload payload{std::move(targets), std::move(weights), {}};
  payload.coverage.resize(ground.size(), 0);
  for (std::size_t k = 0; k < ground.size(); ++k) {
    for (const std::string& id : coverage[k]) {
      auto it = target_index.find(id);
      if (it == target_index.end()) {
        throw InputError("objective.coverage." + ground[k] +
                         ": unknown target '" + id + "'");
      }
      payload.coverage[k] |= std::uint64_t{1} << it->second;
    }
  }
  return SetFunction(std::move(ground), std::move(payload));
}

SetFunction SetFunction::CurvatureWitness(std::vector<std::string> ground,
                                          Rational lambda, ElementSet u,
                                          ElementSet v) {
  if (lambda < 0 || lambda > 1) {
    throw InputError("objective.lambda: must lie in [0, 1], got " +
                     ToString(lambda));
  }
  const int m = static_cast<int>(ground.size());
  RequireWithinGround(u, m, "objective.U");
  RequireWithinGround(v, m, "objective.V");
  if ((u & v) != 0) throw InputError("objective.U: overlaps objective.V");
  return SetFunction(std::move(ground), CurvatureWitnessPayload{lambda, u, v});
}

SetFunction SetFunction::PAdditiveWitness(std::vector<std::string> ground,
                                          int p, ElementSet u, ElementSet v) {
  if (p < 1) {
    throw InputError("objective.p: must be a positive integer, got " +
                     std::to_string(p));
  }
  const int m = static_cast<int>(ground.size());
  RequireWithinGround(u, m, "objective.U");
  RequireWithinGround(v, m, "objective.V");
  if ((u & v) != 0) throw InputError("objective.U: overlaps objective.V");
  return SetFunction(std::move(ground), PAdditiveWitnessPayload{p, u, v});
}

ObjectiveKind SetFunction::kind() const {
  return static_cast<ObjectiveKind>(payload_.index());
}

ElementSet SetFunction::full_set() const {
  const int m = size();
  return m == kMaxGroundSize ? ~ElementSet{0} : (ElementSet{1} << m) - 1;
}

int SetFunction::IndexOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw InputError("unknown element id '" + std::string(id) + "'");
  }
  return it->second;
}

ElementSet SetFunction::SetOf(std::span<const std::string> ids) const {
  ElementSet set = 0;
  for (const auto& id : ids) set |= Singleton(IndexOf(id));
  return set;
}

void SetFunction::CheckSubset(ElementSet set) const {
  if ((set & ~full_set()) != 0) {
    throw InputError("unknown element index " +
                     std::to_string(std::countr_zero(set & ~full_set())));
  }
}

Rational SetFunction::Evaluate(ElementSet set) const {
  CheckSubset(set);
  struct Visitor {
    ElementSet set;
    Rational operator()(const TabularPayload& t) const { return t.values[set]; }
    Rational operator()(const CoverPayload& c) const {
      std::uint64_t covered = 0;
      for (ElementSet s = set; s != 0; s &= s - 1) {
        covered |= c.coverage[std::countr_zero(s)];
      }
      Rational total(0);
      for (; covered != 0; covered &= covered - 1) {
        total += c.weights[std::countr_zero(covered)];
      }
      return total;
    }
    Rational operator()(const CurvatureWitnessPayload& w) const {
      const int nu = Cardinality(set & w.u);
      const int nv = Cardinality(set & w.v);
      return Rational(std::min(1, nu)) * w.lambda +
             Rational(nu) * (1 - w.lambda) + Rational(nv);
    }
    Rational operator()(const PAdditiveWitnessPayload& w) const {
      const int nu = Cardinality(set & w.u);
      const int nv = Cardinality(set & w.v);
      return std::min(Rational(1), Rational(nu, w.p)) + Rational(nv, w.p);
    }
  };
  return std::visit(Visitor{set}, payload_);
}

Rational SetFunction::Evaluate(std::span<const std::string> ids) const {
  return Evaluate(SetOf(ids));
}

Rational SetFunction::Marginal(ElementSet a, ElementSet b) const {
  return Evaluate(a | b) - Evaluate(b);
}

AgentSpace::AgentSpace(const SetFunction& f, std::vector<ElementSet> decisions)
    : ground_size_(f.size()), decisions_(std::move(decisions)) {
  ElementSet seen = 0;
  for (std::size_t k = 0; k < decisions_.size(); ++k) {
    const ElementSet d = decisions_[k];
    if ((d & ~f.full_set()) != 0) {
      throw InputError("agents[" + std::to_string(k) +
                       "]: element outside the ground set");
    }
    if ((d & seen) != 0) {
      const int e = std::countr_zero(d & seen);
      throw InputError("partition: element '" + f.ground()[e] +
                       "' belongs to more than one agent (agents[" +
                       std::to_string(k) + "])");
    }
    seen |= d;
  }
  if (seen != f.full_set()) {
    const int e = std::countr_zero(f.full_set() & ~seen);
    throw InputError("partition: element '" + f.ground()[e] +
                     "' is not assigned to any agent");
  }
}

AgentSpace AgentSpace::FromIds(const SetFunction& f,
                               const std::vector<std::vector<std::string>>& ids) {
  std::vector<ElementSet> decisions;
  decisions.reserve(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    ElementSet d = 0;
    for (const auto& id : ids[k]) {
      const int e = f.IndexOf(id);
      if (Contains(d, e)) {
        throw InputError("agents[" + std::to_string(k) + "]: duplicate id '" +
                         id + "'");
      }
      d |= Singleton(e);
    }
    decisions.push_back(d);
  }
  return AgentSpace(f, std::move(decisions));
}

const PropertyViolation* PropertyReport::Find(
    PropertyViolation::Property p) const {
  for (const auto& v : counterexamples) {
    if (v.property == p) return &v;
  }
  return nullptr;
}

std::vector<Rational> ValueTable(const SetFunction& f, int cap) {
  if (f.size() > cap) {
    throw CapacityError("exhaustive enumeration over " +
                        std::to_string(f.size()) +
                        " ground elements exceeds the cap of " +
                        std::to_string(cap));
  }
  const std::size_t count = std::size_t{1} << f.size();
  std::vector<Rational> table(count);
  for (std::size_t m = 0; m < count; ++m) table[m] = f.Evaluate(m);
  return table;
}

PropertyReport CheckProperties(const SetFunction& f, int cap) {
  const std::vector<Rational> table = ValueTable(f, cap);
  const int m = f.size();
  const ElementSet full = f.full_set();
  PropertyReport report;
  using Property = PropertyViolation::Property;

  if (table[0] != 0) {
    report.normalized = false;
    report.counterexamples.push_back({Property::kNormalized, std::nullopt, 0, 0});
  }

  for (ElementSet a = 0; a <= full && report.monotone; ++a) {
    for (int e = 0; e < m; ++e) {
      if (table[a | Singleton(e)] < table[a]) {
        report.monotone = false;
        report.counterexamples.push_back({Property::kMonotone, e, a, 0});
        break;
      }
    }
    if (a == full) break;
  }

  // f(e | B∖{x}) ≥ f(e | B) for all B, x ∈ B, e ∉ B. Chaining single steps
  // covers every A ⊆ B.
  for (ElementSet b = 1; b <= full && report.submodular; ++b) {
    for (ElementSet xs = b; xs != 0 && report.submodular; xs &= xs - 1) {
      const ElementSet a = b & ~(xs & -xs);
      for (int e = 0; e < m; ++e) {
        if (Contains(b, e)) continue;
        const Rational gain_small = table[a | Singleton(e)] - table[a];
        const Rational gain_large = table[b | Singleton(e)] - table[b];
        if (gain_small < gain_large) {
          report.submodular = false;
          report.counterexamples.push_back({Property::kSubmodular, e, a, b});
          break;
        }
      }
    }
    if (b == full) break;
  }

  if (report.ok()) {
    Rational min_ratio(1);
    for (int e = 0; e < m; ++e) {
      const Rational single = table[Singleton(e)];
      if (single <= 0) continue;
      const ElementSet rest = full & ~Singleton(e);
      // Enumerate all subsets of `rest`, including the empty one.
      ElementSet a = rest;
      while (true) {
        min_ratio = std::min(min_ratio, (table[a | Singleton(e)] - table[a]) / single);
        if (a == 0) break;
        a = (a - 1) & rest;
      }
    }
    report.curvature = 1 - min_ratio;
  }
  return report;
}

Rational TotalCurvature(const SetFunction& f, int cap) {
  PropertyReport report = CheckProperties(f, cap);
  if (!report.ok()) {
    throw InputError(
        "total curvature requires a normalized, monotone, submodular "
        "objective");
  }
  return *report.curvature;
}

}  // namespace parsub
