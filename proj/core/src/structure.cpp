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

#include "parsub/structure.hpp"

#include <algorithm>

#include "parsub/errors.hpp"

namespace parsub {
namespace {

void RequireRange(int n, int q, const char* q_name) {
  if (n < 1) throw InputError("n: must be at least 1, got " + std::to_string(n));
  if (q < 1 || q > n) {
    throw InputError(std::string(q_name) + ": must lie in 1.." +
                     std::to_string(n) + ", got " + std::to_string(q));
  }
}

int CeilDiv(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::string AssignmentViolation::Describe() const {
  if (kind == Kind::kOutOfRange) {
    return "iteration range: agent " + std::to_string(first) +
           " is assigned outside 1..q";
  }
  return "order preservation: agent " + std::to_string(first) +
         " is assigned a later iteration than agent " + std::to_string(second);
}

std::optional<AssignmentViolation> ValidateAssignment(
    const IterationAssignment& assignment) {
  for (int i = 1; i <= assignment.n(); ++i) {
    const int it = assignment.of(i);
    if (it < 1 || it > assignment.q) {
      return AssignmentViolation{AssignmentViolation::Kind::kOutOfRange, i, i};
    }
  }
  for (int i = 1; i < assignment.n(); ++i) {
    if (assignment.of(i) > assignment.of(i + 1)) {
      return AssignmentViolation{AssignmentViolation::Kind::kOrderPreservation,
                                 i, i + 1};
    }
  }
  return std::nullopt;
}

InformationGraph::InformationGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InputError("n: must be nonnegative");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto& [i, j] = edges_[k];
    if (i > j) std::swap(i, j);
    if (i == j) {
      throw InputError("edges[" + std::to_string(k) + "]: self loop on vertex " +
                       std::to_string(i));
    }
    if (i < 1 || j > n) {
      throw InputError("edges[" + std::to_string(k) + "]: endpoint outside 1.." +
                       std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  in_neighbors_.assign(n_, {});
  for (const auto& [i, j] : edges_) in_neighbors_[j - 1].push_back(i);
}

InformationGraph InformationGraph::Edgeless(int n) { return {n, {}}; }

InformationGraph InformationGraph::Complete(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return {n, std::move(edges)};
}

InformationGraph InformationGraph::Path(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return {n, std::move(edges)};
}

InformationGraph InformationGraph::Star(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, n);
  return {n, std::move(edges)};
}

bool InformationGraph::HasEdge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

InformationGraph InformationGraph::Complement() const {
  std::vector<Edge> edges;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!HasEdge(i, j)) edges.emplace_back(i, j);
  return {n_, std::move(edges)};
}

bool InformationGraph::IsSubgraphOf(const InformationGraph& other) const {
  return n_ == other.n_ && std::includes(other.edges_.begin(), other.edges_.end(),
                                         edges_.begin(), edges_.end());
}

Schedule EarliestSchedule(const InformationGraph& graph) {
  Schedule schedule;
  schedule.assignment.iteration.assign(graph.n(), 1);
  auto& level = schedule.assignment.iteration;
  for (int i = 1; i <= graph.n(); ++i) {
    for (int j : graph.InNeighbors(i)) {
      level[i - 1] = std::max(level[i - 1], level[j - 1] + 1);
    }
  }
  schedule.depth = graph.n() == 0 ? 0 : *std::max_element(level.begin(), level.end());
  schedule.assignment.q = schedule.depth;
  return schedule;
}

bool IsFeasible(const InformationGraph& graph, int q) {
  return EarliestSchedule(graph).depth <= q;
}

InformationGraph InducedGraph(const IterationAssignment& assignment) {
  if (auto violation = ValidateAssignment(assignment)) {
    throw InputError(violation->Describe());
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= assignment.n(); ++i)
    for (int j = i + 1; j <= assignment.n(); ++j)
      if (assignment.of(i) < assignment.of(j)) edges.emplace_back(i, j);
  return {assignment.n(), std::move(edges)};
}

int BlockSize(int n, int q) {
  RequireRange(n, q, "q");
  return CeilDiv(n, q);
}

bool IsOneModQ(int n, int q) { return n % q == 1 % q; }

IterationAssignment OptimalAssignment(int n, int q) {
  const int r = BlockSize(n, q);
  IterationAssignment p{q, std::vector<int>(n)};
  if (n == 1) {
    p.iteration[0] = 1;
    return p;
  }
  if (IsOneModQ(n, q)) {
    for (int i = 1; i < n; ++i) p.iteration[i - 1] = CeilDiv(i, r - 1);
    p.iteration[n - 1] = q;
  } else {
    for (int i = 1; i <= n; ++i) p.iteration[i - 1] = CeilDiv(i, r);
  }
  return p;
}

InformationGraph OptimalGraph(int n, int q) {
  const int r = BlockSize(n, q);
  if (n == 1) return InformationGraph::Edgeless(1);
  if (!IsOneModQ(n, q)) return ComplementTuran(n, r);
  std::vector<Edge> edges;
  const int period = r - 1;
  for (int i = 1; i < n; ++i)
    for (int j = i + period; j < n; j += period) edges.emplace_back(i, j);
  for (int i = 1; i <= (q - 1) * period; ++i) edges.emplace_back(i, n);
  return {n, std::move(edges)};
}

InformationGraph TuranGraph(int n, int r) {
  RequireRange(n, r, "r");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if ((i - 1) % r != (j - 1) % r) edges.emplace_back(i, j);
  return {n, std::move(edges)};
}

InformationGraph ComplementTuran(int n, int r) {
  RequireRange(n, r, "r");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + r; j <= n; j += r) edges.emplace_back(i, j);
  return {n, std::move(edges)};
}

}  // namespace parsub
