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

#ifndef PARSUB_STRUCTURE_HPP_
#define PARSUB_STRUCTURE_HPP_

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parsub {

// Order-preserving map from agents 1..n to iterations 1..q. Construction does
// not validate; call ValidateAssignment.
struct IterationAssignment {
  int q = 0;
  // iteration[k] is the iteration of agent k + 1.
  std::vector<int> iteration;

  int n() const { return static_cast<int>(iteration.size()); }
  int of(int agent) const { return iteration.at(agent - 1); }

  bool operator==(const IterationAssignment&) const = default;
};

struct AssignmentViolation {
  enum class Kind { kOrderPreservation, kOutOfRange };
  Kind kind;
  // 1-based agents. For kOutOfRange both name the offending agent.
  int first = 0;
  int second = 0;

  std::string Describe() const;
  bool operator==(const AssignmentViolation&) const = default;
};

std::optional<AssignmentViolation> ValidateAssignment(
    const IterationAssignment& assignment);

// Undirected edge {i, j}, stored with i < j. The lower index observes nothing
// from the higher; agent j reads agent i's decision.
using Edge = std::pair<int, int>;

// Undirected graph on agents 1..n with a canonical sorted edge list. Equality
// is structural; labels matter because index order encodes information flow.
class InformationGraph {
 public:
  InformationGraph() = default;
  // Edges are canonicalized and deduplicated. Throws InputError for self
  // loops or endpoints outside 1..n.
  InformationGraph(int n, std::vector<Edge> edges);

  static InformationGraph Edgeless(int n);
  static InformationGraph Complete(int n);
  static InformationGraph Path(int n);
  // Leaves 1..n-1 all joined to centre n.
  static InformationGraph Star(int n);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool HasEdge(int i, int j) const;
  // N_i = { j < i : {j, i} ∈ E }, ascending.
  const std::vector<int>& InNeighbors(int agent) const {
    return in_neighbors_.at(agent - 1);
  }
  InformationGraph Complement() const;
  bool IsSubgraphOf(const InformationGraph& other) const;

  bool operator==(const InformationGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> in_neighbors_;
};

struct Schedule {
  IterationAssignment assignment;
  int depth = 0;
};

// P̄(i) = 1 if N_i is empty, else 1 + max over N_i. Pointwise minimal among
// schedules that respect every edge.
Schedule EarliestSchedule(const InformationGraph& graph);

// G ∈ G_{n,q}: the earliest schedule uses at most q iterations.
bool IsFeasible(const InformationGraph& graph, int q);

// E = {(i, j) : P(i) < P(j)}. Throws InputError for an invalid assignment.
InformationGraph InducedGraph(const IterationAssignment& assignment);

// r = ⌈n / q⌉.
int BlockSize(int n, int q);

// The "n ≡ 1 (mod q)" branch, evaluated as (n mod q) == (1 mod q) so that
// q = 1 always selects it.
bool IsOneModQ(int n, int q);

// Evenly spread assignment: P(i) = ⌈i / r⌉, or, when n ≡ 1 (mod q),
// P(i) = ⌈i / (r − 1)⌉ for i < n and P(n) = q. Requires 1 ≤ q ≤ n.
IterationAssignment OptimalAssignment(int n, int q);

// Sparse graphs attaining the optimal ratio for q iterations. When
// n ≡ 1 (mod q): {i, j} for i < j < n with i ≡ j (mod r − 1), plus {i, n} for
// i ≤ (q − 1)(r − 1). Otherwise the complement Turán graph with residue
// classes mod r. Requires 1 ≤ q ≤ n.
InformationGraph OptimalGraph(int n, int q);

// Vertices are split into r classes by residue of (i − 1) mod r, which gives
// (n mod r) classes of size ⌈n/r⌉ and the rest of size ⌊n/r⌋. TuranGraph joins
// vertices in different classes; ComplementTuran joins vertices in the same
// class. Requires 1 ≤ r ≤ n.
InformationGraph TuranGraph(int n, int r);
InformationGraph ComplementTuran(int n, int r);

}  // namespace parsub

#endif  // PARSUB_STRUCTURE_HPP_
