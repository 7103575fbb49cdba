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

#ifndef PARSUB_TOOLS_CLI_IO_HPP_
#define PARSUB_TOOLS_CLI_IO_HPP_

#include <optional>
#include <string>

#include "json.hpp"
#include "parsub/adversarial.hpp"
#include "parsub/greedy.hpp"
#include "parsub/objective.hpp"
#include "parsub/rational.hpp"
#include "parsub/structure.hpp"

namespace parsub::cli {

using Json = nlohmann::ordered_json;

// Instance documents:
//   {"ground": [ids], "agents": [[ids], ...],
//    "objective": {"kind": "tabular", "values": [r, ...]}            2^|ground| values by bitmask
//               | {"kind": "cover", "targets": [ids], "weights": [r, ...],
//                  "coverage": {id: [target ids], ...}}
//               | {"kind": "curvature-witness", "lambda": r, "U": [ids], "V": [ids]}
//               | {"kind": "p-additive-witness", "p": int, "U": [ids], "V": [ids]},
//    optional "graph", "bound_ref", "predicted_ratio" annotations}
// Rationals are JSON integers or strings "p/q".
struct LoadedInstance {
  SetFunction f;
  AgentSpace x;
  std::optional<InformationGraph> graph;
  std::optional<std::string> bound_ref;
  std::optional<Rational> predicted_ratio;
};

Rational ParseRationalField(const Json& value, const std::string& field);
Json RationalToJson(const Rational& value);

LoadedInstance ParseInstance(const Json& doc);
InformationGraph ParseGraph(const Json& doc, const std::string& field = "");
IterationAssignment ParseAssignment(const Json& doc);

// Reading failures surface as InputError with the path and, for syntax
// errors, the line and column.
Json ReadJsonFile(const std::string& path);
LoadedInstance LoadInstance(const std::string& path);
InformationGraph LoadGraph(const std::string& path);
IterationAssignment LoadAssignment(const std::string& path);

Json GraphToJson(const InformationGraph& g);
Json AssignmentToJson(const IterationAssignment& p);
Json InstanceToJson(const SetFunction& f, const AgentSpace& x);
Json WitnessToJson(const WitnessInstance& w);

// "id,id,-" style rendering of a profile ("-" is the null decision).
std::string ProfileToString(const SetFunction& f, const Profile& profile);

void WriteJsonFile(const std::string& path, const Json& doc);

}  // namespace parsub::cli

#endif  // PARSUB_TOOLS_CLI_IO_HPP_
