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

#include "cli/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "parsub/errors.hpp"

namespace parsub::cli {
namespace {

const Json& Require(const Json& obj, const char* key, const std::string& context) {
  const std::string field = context.empty() ? key : context + "." + key;
  if (!obj.is_object()) {
    throw InputError((context.empty() ? std::string("document") : context) +
                     ": expected a JSON object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(field + ": missing required field");
  return *it;
}

std::string Join(const std::string& context, const std::string& key) {
  return context.empty() ? key : context + "." + key;
}

std::vector<std::string> ParseIdList(const Json& value, const std::string& field) {
  if (!value.is_array()) throw InputError(field + ": expected an array of ids");
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < value.size(); ++k) {
    if (!value[k].is_string()) {
      throw InputError(field + "[" + std::to_string(k) + "]: expected a string id");
    }
    ids.push_back(value[k].get<std::string>());
  }
  return ids;
}

int ParseInt(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) throw InputError(field + ": expected an integer");
  const auto v = value.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) throw InputError(field + ": integer out of range");
  return static_cast<int>(v);
}

ElementSet ParseSubset(const SetFunction& f, const Json& value, const std::string& field) {
  ElementSet set = 0;
  for (const auto& id : ParseIdList(value, field)) {
    try {
      set |= Singleton(f.IndexOf(id));
    } catch (const InputError& e) {
      throw InputError(field + ": " + e.what());
    }
  }
  return set;
}

std::vector<std::string> IdsOf(const SetFunction& f, ElementSet set) {
  std::vector<std::string> ids;
  for (int e : Members(set)) ids.push_back(f.ground()[e]);
  return ids;
}

}  // namespace

Rational ParseRationalField(const Json& value, const std::string& field) {
  try {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_string()) return ParseRational(value.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
  throw InputError(field + ": expected an integer or a \"p/q\" string");
}

Json RationalToJson(const Rational& value) {
  if (value.denominator() == 1) return value.numerator();
  return ToString(value);
}

LoadedInstance ParseInstance(const Json& doc) {
  std::vector<std::string> ground = ParseIdList(Require(doc, "ground", ""), "ground");
  const Json& objective = Require(doc, "objective", "");
  const Json& kind_field = Require(objective, "kind", "objective");
  if (!kind_field.is_string()) throw InputError("objective.kind: expected a string");
  const std::string kind = kind_field.get<std::string>();

  std::optional<SetFunction> f;
  if (kind == "tabular") {
    const Json& values = Require(objective, "values", "objective");
    if (!values.is_array()) throw InputError("objective.values: expected an array");
    std::vector<Rational> table;
    for (std::size_t k = 0; k < values.size(); ++k) {
      table.push_back(ParseRationalField(values[k], "objective.values[" + std::to_string(k) + "]"));
    }
    f = SetFunction::Tabular(std::move(ground), std::move(table));
  } else if (kind == "cover") {
    std::vector<std::string> targets =
        ParseIdList(Require(objective, "targets", "objective"), "objective.targets");
    const Json& weights_json = Require(objective, "weights", "objective");
    if (!weights_json.is_array()) throw InputError("objective.weights: expected an array");
    std::vector<Rational> weights;
    for (std::size_t k = 0; k < weights_json.size(); ++k) {
      weights.push_back(
          ParseRationalField(weights_json[k], "objective.weights[" + std::to_string(k) + "]"));
    }
    const Json& coverage_json = Require(objective, "coverage", "objective");
    if (!coverage_json.is_object()) {
      throw InputError("objective.coverage: expected an object keyed by element id");
    }
    std::vector<std::vector<std::string>> coverage(ground.size());
    for (const auto& [id, covered] : coverage_json.items()) {
      auto pos = std::find(ground.begin(), ground.end(), id);
      if (pos == ground.end()) {
        throw InputError("objective.coverage." + id + ": unknown element id");
      }
      coverage[pos - ground.begin()] = ParseIdList(covered, "objective.coverage." + id);
    }
    f = SetFunction::Cover(std::move(ground), std::move(targets), std::move(weights), coverage);
  } else if (kind == "curvature-witness" || kind == "p-additive-witness") {
    // Resolve U and V against the ground order before building f.
    auto index_of = [&](const Json& list, const std::string& field) {
      ElementSet set = 0;
      for (const auto& id : ParseIdList(list, field)) {
        auto pos = std::find(ground.begin(), ground.end(), id);
        if (pos == ground.end()) throw InputError(field + ": unknown element id '" + id + "'");
        set |= Singleton(static_cast<int>(pos - ground.begin()));
      }
      return set;
    };
    const ElementSet u = index_of(Require(objective, "U", "objective"), "objective.U");
    const ElementSet v = index_of(Require(objective, "V", "objective"), "objective.V");
    if (kind == "curvature-witness") {
      const Rational lambda =
          ParseRationalField(Require(objective, "lambda", "objective"), "objective.lambda");
      f = SetFunction::CurvatureWitness(std::move(ground), lambda, u, v);
    } else {
      const int p = ParseInt(Require(objective, "p", "objective"), "objective.p");
      f = SetFunction::PAdditiveWitness(std::move(ground), p, u, v);
    }
  } else {
    throw InputError("objective.kind: unknown kind '" + kind +
                     "' (expected tabular, cover, curvature-witness or p-additive-witness)");
  }

  const Json& agents_json = Require(doc, "agents", "");
  if (!agents_json.is_array()) throw InputError("agents: expected an array of id lists");
  std::vector<ElementSet> decisions;
  for (std::size_t k = 0; k < agents_json.size(); ++k) {
    const std::string field = "agents[" + std::to_string(k) + "]";
    const ElementSet d = ParseSubset(*f, agents_json[k], field);
    if (Cardinality(d) != static_cast<int>(agents_json[k].size())) {
      throw InputError(field + ": duplicate element id");
    }
    decisions.push_back(d);
  }
  AgentSpace x(*f, std::move(decisions));

  LoadedInstance out{std::move(*f), std::move(x), std::nullopt, std::nullopt, std::nullopt};
  if (auto it = doc.find("graph"); it != doc.end()) out.graph = ParseGraph(*it, "graph");
  if (auto it = doc.find("bound_ref"); it != doc.end()) {
    if (!it->is_string()) throw InputError("bound_ref: expected a string");
    out.bound_ref = it->get<std::string>();
  }
  if (auto it = doc.find("predicted_ratio"); it != doc.end()) {
    out.predicted_ratio = ParseRationalField(*it, "predicted_ratio");
  }
  return out;
}

InformationGraph ParseGraph(const Json& doc, const std::string& context) {
  const int n = ParseInt(Require(doc, "n", context), Join(context, "n"));
  if (n < 0) throw InputError(Join(context, "n") + ": must be nonnegative");
  const Json& edges_json = Require(doc, "edges", context);
  const std::string edges_field = Join(context, "edges");
  if (!edges_json.is_array()) throw InputError(edges_field + ": expected an array of [i, j] pairs");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < edges_json.size(); ++k) {
    const std::string field = edges_field + "[" + std::to_string(k) + "]";
    const Json& e = edges_json[k];
    if (!e.is_array() || e.size() != 2) throw InputError(field + ": expected an [i, j] pair");
    const int i = ParseInt(e[0], field + "[0]");
    const int j = ParseInt(e[1], field + "[1]");
    if (i >= j) throw InputError(field + ": expected i < j");
    edges.emplace_back(i, j);
  }
  try {
    return InformationGraph(n, std::move(edges));
  } catch (const InputError& e) {
    throw InputError(context.empty() ? e.what() : context + "." + e.what());
  }
}

IterationAssignment ParseAssignment(const Json& doc) {
  IterationAssignment p;
  p.q = ParseInt(Require(doc, "q", ""), "q");
  const Json& levels = Require(doc, "P", "");
  if (!levels.is_array()) throw InputError("P: expected an array of iterations");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    p.iteration.push_back(ParseInt(levels[k], "P[" + std::to_string(k) + "]"));
  }
  if (auto violation = ValidateAssignment(p)) throw InputError("P: " + violation->Describe());
  return p;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

LoadedInstance LoadInstance(const std::string& path) {
  try {
    return ParseInstance(ReadJsonFile(path));
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()).starts_with(path) ? e.what() : path + ": " + e.what());
  }
}

InformationGraph LoadGraph(const std::string& path) {
  const Json doc = ReadJsonFile(path);
  try {
    return ParseGraph(doc);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

IterationAssignment LoadAssignment(const std::string& path) {
  const Json doc = ReadJsonFile(path);
  try {
    return ParseAssignment(doc);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json GraphToJson(const InformationGraph& g) {
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Json AssignmentToJson(const IterationAssignment& p) {
  return Json{{"q", p.q}, {"P", p.iteration}};
}

Json InstanceToJson(const SetFunction& f, const AgentSpace& x) {
  Json doc;
  doc["ground"] = f.ground();
  Json agents = Json::array();
  for (int i = 1; i <= x.n(); ++i) agents.push_back(IdsOf(f, x.decisions(i)));
  doc["agents"] = std::move(agents);

  Json objective;
  objective["kind"] = std::string(KindName(f.kind()));
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, TabularPayload>) {
          Json values = Json::array();
          for (const auto& v : payload.values) values.push_back(RationalToJson(v));
          objective["values"] = std::move(values);
        } else if constexpr (std::is_same_v<T, CoverPayload>) {
          objective["targets"] = payload.targets;
          Json weights = Json::array();
          for (const auto& w : payload.weights) weights.push_back(RationalToJson(w));
          objective["weights"] = std::move(weights);
          Json coverage = Json::object();
          for (int e = 0; e < f.size(); ++e) {
            Json covered = Json::array();
            for (int t : Members(payload.coverage[e])) covered.push_back(payload.targets[t]);
            coverage[f.ground()[e]] = std::move(covered);
          }
          objective["coverage"] = std::move(coverage);
        } else if constexpr (std::is_same_v<T, CurvatureWitnessPayload>) {
          objective["lambda"] = RationalToJson(payload.lambda);
          objective["U"] = IdsOf(f, payload.u);
          objective["V"] = IdsOf(f, payload.v);
        } else {
          objective["p"] = payload.p;
          objective["U"] = IdsOf(f, payload.u);
          objective["V"] = IdsOf(f, payload.v);
        }
      },
      f.payload());
  doc["objective"] = std::move(objective);
  return doc;
}

Json WitnessToJson(const WitnessInstance& w) {
  Json doc = InstanceToJson(w.f, w.x);
  doc["graph"] = GraphToJson(w.g);
  doc["bound_ref"] = w.bound_ref;
  doc["predicted_ratio"] = RationalToJson(w.predicted_ratio);
  return doc;
}

std::string ProfileToString(const SetFunction& f, const Profile& profile) {
  std::string out;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (k) out += ',';
    out += profile[k] ? f.ground()[*profile[k]] : "-";
  }
  return out;
}

void WriteJsonFile(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw InputError(path + ": write failed");
}

}  // namespace parsub::cli
