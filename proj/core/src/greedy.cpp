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

#include "parsub/greedy.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "parsub/errors.hpp"

namespace parsub {
namespace {

void CheckDimensions(const SetFunction& f, const AgentSpace& x, int n) {
  if (x.ground_size() != f.size()) {
    throw InputError("agents: decision sets do not match the objective's ground set");
  }
  if (x.n() != n) {
    throw InputError("graph: has " + std::to_string(n) + " vertices but there are " +
                     std::to_string(x.n()) + " agents");
  }
}

// Decisions in `options` maximizing f(d | visible), ascending; {0} (the null
// decision) when options is empty.
std::vector<ElementSet> Maximizers(const SetFunction& f, ElementSet options,
                                   ElementSet visible) {
  if (options == 0) return {0};
  const Rational base = f.Evaluate(visible);
  std::vector<ElementSet> best;
  Rational best_gain;
  for (int e : Members(options)) {
    const Rational gain = f.Evaluate(visible | Singleton(e)) - base;
    if (best.empty() || gain > best_gain) {
      best.assign(1, Singleton(e));
      best_gain = gain;
    } else if (gain == best_gain) {
      best.push_back(Singleton(e));
    }
  }
  return best;
}

// Per agent: the union of the decision sets of its in-neighbours.
std::vector<ElementSet> NeighbourDecisions(const AgentSpace& x,
                                           const InformationGraph& g) {
  std::vector<ElementSet> out(x.n(), 0);
  for (int i = 1; i <= x.n(); ++i)
    for (int j : g.InNeighbors(i)) out[i - 1] |= x.decisions(j);
  return out;
}

GreedyOutcome BuildOutcome(const SetFunction& f, const AgentSpace& x,
                           const std::vector<ElementSet>& visible_to,
                           ElementSet chosen, long resolutions) {
  GreedyOutcome out;
  out.profile.resize(x.n());
  out.per_agent_marginal.resize(x.n());
  for (int a = 0; a < x.n(); ++a) {
    const ElementSet d = chosen & x.decisions(a + 1);
    if (d != 0) out.profile[a] = std::countr_zero(d);
    out.per_agent_marginal[a] = f.Marginal(d, chosen & visible_to[a]);
  }
  out.value = f.Evaluate(chosen);
  out.resolutions_explored = resolutions;
  return out;
}

// Tie tree for the generalized greedy. Subtrees are shared between prefixes
// that expose the same decisions to the agents still to move; each memo entry
// holds every achievable suffix decision set in lexicographic order.
class TieTree {
 public:
  TieTree(const SetFunction& f, const AgentSpace& x, const InformationGraph& g,
          long node_cap)
      : f_(f), x_(x), node_cap_(node_cap), visible_to_(NeighbourDecisions(x, g)) {
    const int n = x.n();
    std::vector<int> last_reader(n, -1);
    for (int i = 1; i <= n; ++i)
      for (int j : g.InNeighbors(i)) last_reader[j - 1] = std::max(last_reader[j - 1], i - 1);
    relevant_.assign(n + 1, 0);
    for (int a = 0; a <= n; ++a)
      for (int j = 0; j < a; ++j)
        if (last_reader[j] >= a) relevant_[a] |= x.decisions(j + 1);
  }

  const std::vector<ElementSet>& Outcomes() { return Suffixes(0, 0); }
  const std::vector<ElementSet>& visible_to() const { return visible_to_; }

 private:
  const std::vector<ElementSet>& Suffixes(int agent, ElementSet exposed) {
    auto key = std::make_pair(agent, exposed);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Charge(1);
    std::vector<ElementSet> result;
    if (agent == x_.n()) {
      result.push_back(0);
    } else {
      const ElementSet visible = exposed & visible_to_[agent];
      for (ElementSet d : Maximizers(f_, x_.decisions(agent + 1), visible)) {
        const ElementSet next = (exposed | d) & relevant_[agent + 1];
        const auto& tails = Suffixes(agent + 1, next);
        Charge(static_cast<long>(tails.size()));
        for (ElementSet tail : tails) result.push_back(d | tail);
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  void Charge(long amount) {
    nodes_ += amount;
    if (nodes_ > node_cap_) {
      throw CapacityError("greedy tie tree exceeds the node cap of " +
                          std::to_string(node_cap_));
    }
  }

  const SetFunction& f_;
  const AgentSpace& x_;
  long node_cap_;
  long nodes_ = 0;
  std::vector<ElementSet> visible_to_;
  std::vector<ElementSet> relevant_;
  std::map<std::pair<int, ElementSet>, std::vector<ElementSet>> memo_;
};

}  // namespace

std::string_view PolicyName(TiePolicy policy) {
  switch (policy) {
    case TiePolicy::kFirst:
      return "first";
    case TiePolicy::kLast:
      return "last";
    case TiePolicy::kWorst:
      return "worst";
    case TiePolicy::kBest:
      return "best";
    case TiePolicy::kAll:
      return "all";
  }
  return "unknown";
}

std::optional<TiePolicy> ParsePolicy(std::string_view name) {
  for (TiePolicy p : {TiePolicy::kFirst, TiePolicy::kLast, TiePolicy::kWorst,
                      TiePolicy::kBest, TiePolicy::kAll}) {
    if (PolicyName(p) == name) return p;
  }
  return std::nullopt;
}

ElementSet GreedyOutcome::chosen() const {
  ElementSet set = 0;
  for (const auto& d : profile)
    if (d) set |= Singleton(*d);
  return set;
}

GreedyOutcome RunGreedy(const SetFunction& f, const AgentSpace& x,
                        const InformationGraph& g, TiePolicy policy,
                        long node_cap) {
  CheckDimensions(f, x, g.n());
  if (policy == TiePolicy::kAll) {
    throw InputError("policy: 'all' yields several outcomes; use RunGreedyAll");
  }
  GreedyOutcome out;
  if (policy == TiePolicy::kFirst || policy == TiePolicy::kLast) {
    const auto visible_to = NeighbourDecisions(x, g);
    ElementSet chosen = 0;
    for (int a = 0; a < x.n(); ++a) {
      const auto ties = Maximizers(f, x.decisions(a + 1), chosen & visible_to[a]);
      chosen |= policy == TiePolicy::kFirst ? ties.front() : ties.back();
    }
    out = BuildOutcome(f, x, visible_to, chosen, 1);
  } else {
    TieTree tree(f, x, g, node_cap);
    const auto& outcomes = tree.Outcomes();
    ElementSet pick = outcomes.front();
    Rational pick_value = f.Evaluate(pick);
    for (ElementSet s : outcomes) {
      const Rational v = f.Evaluate(s);
      if (policy == TiePolicy::kWorst ? v < pick_value : v > pick_value) {
        pick = s;
        pick_value = v;
      }
    }
    out = BuildOutcome(f, x, tree.visible_to(), pick,
                       static_cast<long>(outcomes.size()));
  }
  out.schedule = EarliestSchedule(g);
  return out;
}

std::vector<GreedyOutcome> RunGreedyAll(const SetFunction& f, const AgentSpace& x,
                                        const InformationGraph& g, long node_cap) {
  CheckDimensions(f, x, g.n());
  TieTree tree(f, x, g, node_cap);
  const auto& outcomes = tree.Outcomes();
  const Schedule schedule = EarliestSchedule(g);
  std::vector<GreedyOutcome> out;
  out.reserve(outcomes.size());
  for (ElementSet s : outcomes) {
    out.push_back(BuildOutcome(f, x, tree.visible_to(), s,
                               static_cast<long>(outcomes.size())));
    out.back().schedule = schedule;
  }
  return out;
}

namespace {

// Rounds are processed in order; within a round the cartesian product of the
// agents' maximizer lists is walked with the lowest agent as the most
// significant digit, which matches the sequential lexicographic order.
class RoundSearch {
 public:
  RoundSearch(const SetFunction& f, const AgentSpace& x,
              std::vector<std::vector<int>> rounds, TiePolicy policy, long node_cap)
      : f_(f), x_(x), rounds_(std::move(rounds)), policy_(policy), node_cap_(node_cap) {}

  ElementSet Run() {
    Round(0, 0);
    return best_;
  }
  long leaves() const { return leaves_; }

 private:
  void Round(std::size_t k, ElementSet chosen) {
    if (k == rounds_.size()) {
      ++leaves_;
      const Rational v = f_.Evaluate(chosen);
      const bool better = policy_ == TiePolicy::kWorst ? v < best_value_ : v > best_value_;
      if (!have_best_ || better) {
        have_best_ = true;
        best_ = chosen;
        best_value_ = v;
      }
      return;
    }
    std::vector<std::vector<ElementSet>> ties;
    for (int agent : rounds_[k]) ties.push_back(Maximizers(f_, x_.decisions(agent), chosen));
    std::vector<std::size_t> digit(ties.size(), 0);
    while (true) {
      if (++nodes_ > node_cap_) {
        throw CapacityError("parallel greedy tie tree exceeds the node cap of " +
                            std::to_string(node_cap_));
      }
      ElementSet next = chosen;
      for (std::size_t a = 0; a < ties.size(); ++a) next |= ties[a][digit[a]];
      Round(k + 1, next);
      std::size_t pos = ties.size();
      while (pos > 0) {
        --pos;
        if (++digit[pos] < ties[pos].size()) break;
        digit[pos] = 0;
        if (pos == 0) return;
      }
      if (ties.empty()) return;
    }
  }

  const SetFunction& f_;
  const AgentSpace& x_;
  std::vector<std::vector<int>> rounds_;
  TiePolicy policy_;
  long node_cap_;
  long nodes_ = 0;
  long leaves_ = 0;
  bool have_best_ = false;
  ElementSet best_ = 0;
  Rational best_value_;
};

}  // namespace

GreedyOutcome RunParallelGreedy(const SetFunction& f, const AgentSpace& x,
                                const IterationAssignment& assignment,
                                TiePolicy policy, long node_cap) {
  CheckDimensions(f, x, assignment.n());
  if (auto violation = ValidateAssignment(assignment)) {
    throw InputError(violation->Describe());
  }
  if (policy == TiePolicy::kAll) {
    throw InputError("policy: 'all' is not supported by the parallel runner");
  }
  std::vector<std::vector<int>> rounds(assignment.q);
  for (int i = 1; i <= assignment.n(); ++i) rounds[assignment.of(i) - 1].push_back(i);
  std::erase_if(rounds, [](const auto& r) { return r.empty(); });

  ElementSet chosen = 0;
  long resolutions = 1;
  if (policy == TiePolicy::kFirst || policy == TiePolicy::kLast) {
    for (const auto& round : rounds) {
      ElementSet next = chosen;
      for (int agent : round) {
        const auto ties = Maximizers(f, x.decisions(agent), chosen);
        next |= policy == TiePolicy::kFirst ? ties.front() : ties.back();
      }
      chosen = next;
    }
  } else {
    RoundSearch search(f, x, rounds, policy, node_cap);
    chosen = search.Run();
    resolutions = search.leaves();
  }

  GreedyOutcome out;
  out.profile.resize(x.n());
  out.per_agent_marginal.resize(x.n());
  for (int i = 1; i <= x.n(); ++i) {
    ElementSet earlier = 0;
    for (int j = 1; j <= x.n(); ++j)
      if (assignment.of(j) < assignment.of(i)) earlier |= chosen & x.decisions(j);
    const ElementSet d = chosen & x.decisions(i);
    if (d != 0) out.profile[i - 1] = std::countr_zero(d);
    out.per_agent_marginal[i - 1] = f.Marginal(d, earlier);
  }
  out.value = f.Evaluate(chosen);
  out.resolutions_explored = resolutions;
  out.schedule.assignment = assignment;
  out.schedule.depth = assignment.n() == 0
                           ? 0
                           : *std::max_element(assignment.iteration.begin(),
                                               assignment.iteration.end());
  return out;
}

Optimum BruteForceOptimum(const SetFunction& f, const AgentSpace& x, long cap) {
  if (x.ground_size() != f.size()) {
    throw InputError("agents: decision sets do not match the objective's ground set");
  }
  std::vector<std::vector<int>> options(x.n());
  long total = 1;
  for (int a = 0; a < x.n(); ++a) {
    options[a] = Members(x.decisions(a + 1));
    const long width = std::max<long>(1, static_cast<long>(options[a].size()));
    if (total > cap / width) {
      throw CapacityError("brute-force optimum needs more than " + std::to_string(cap) +
                          " profiles");
    }
    total *= width;
  }
  std::vector<std::size_t> digit(x.n(), 0);
  Optimum best;
  bool have = false;
  for (long step = 0; step < total; ++step) {
    ElementSet set = 0;
    for (int a = 0; a < x.n(); ++a)
      if (!options[a].empty()) set |= Singleton(options[a][digit[a]]);
    const Rational v = f.Evaluate(set);
    if (!have || v > best.value) {
      have = true;
      best.value = v;
      best.profile.assign(x.n(), std::nullopt);
      for (int a = 0; a < x.n(); ++a)
        if (!options[a].empty()) best.profile[a] = options[a][digit[a]];
    }
    for (int a = x.n() - 1; a >= 0; --a) {
      if (++digit[a] < std::max<std::size_t>(1, options[a].size())) break;
      digit[a] = 0;
    }
  }
  return best;
}

Rational EmpiricalRatio(const SetFunction& f, const AgentSpace& x,
                        const InformationGraph& g, long node_cap, long profile_cap) {
  const Optimum opt = BruteForceOptimum(f, x, profile_cap);
  if (opt.value == 0) {
    throw UndefinedRatioError("empirical ratio is undefined: the optimum is 0");
  }
  const GreedyOutcome sol = RunGreedy(f, x, g, TiePolicy::kWorst, node_cap);
  return sol.value / opt.value;
}

}  // namespace parsub
