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

#include "parsub/graphmetrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "parsub/errors.hpp"

namespace parsub {
namespace {

using Mask = std::uint64_t;

Mask Bit(int v) { return Mask{1} << v; }

// Dense bitmask view; vertex v of the graph is bit v - 1.
struct BitGraph {
  int n = 0;
  std::vector<Mask> adj;
  std::vector<Mask> in;  // in-neighbourhood (lower-indexed neighbours)

  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

BitGraph ToBits(const InformationGraph& g, int cap, bool complement = false) {
  const int limit = std::min(cap, 64);
  if (g.n() > limit) {
    throw CapacityError("exact graph search on " + std::to_string(g.n()) +
                        " vertices exceeds the cap of " + std::to_string(limit));
  }
  BitGraph b;
  b.n = g.n();
  b.adj.assign(b.n, 0);
  b.in.assign(b.n, 0);
  for (const auto& [i, j] : g.edges()) {
    b.adj[i - 1] |= Bit(j - 1);
    b.adj[j - 1] |= Bit(i - 1);
    b.in[j - 1] |= Bit(i - 1);
  }
  if (complement) {
    for (int v = 0; v < b.n; ++v) {
      b.adj[v] = b.all() & ~b.adj[v] & ~Bit(v);
      b.in[v] = b.adj[v] & (Bit(v) - 1);
    }
  }
  return b;
}

std::vector<int> ToVertices(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

// Branch and bound with greedy colouring bounds.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const BitGraph& g) : g_(g) {}

  Mask Run() {
    best_ = 0;
    best_size_ = 0;
    Expand(0, 0, g_.all());
    return best_;
  }

 private:
  void Expand(Mask clique, int size, Mask candidates) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = clique;
      }
      return;
    }
    std::vector<int> order;
    std::vector<int> colour;
    order.reserve(std::popcount(candidates));
    colour.reserve(order.capacity());
    Mask uncoloured = candidates;
    for (int c = 1; uncoloured != 0; ++c) {
      Mask available = uncoloured;
      while (available != 0) {
        const int v = std::countr_zero(available);
        available &= ~g_.adj[v] & ~Bit(v);
        uncoloured &= ~Bit(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
      if (size + colour[k] <= best_size_) return;
      const int v = order[k];
      Expand(clique | Bit(v), size + 1, candidates & g_.adj[v]);
      candidates &= ~Bit(v);
    }
  }

  const BitGraph& g_;
  Mask best_ = 0;
  int best_size_ = 0;
};

// Exact k-colourability by backtracking with forward checking. Vertices are
// processed in a fixed order; a vertex may open at most one new colour.
class Colouring {
 public:
  Colouring(const BitGraph& g, std::vector<int> order)
      : g_(g), order_(std::move(order)), colour_(g.n, -1) {}

  bool TryColour(int k) {
    k_ = k;
    std::fill(colour_.begin(), colour_.end(), -1);
    return Assign(0, 0);
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  bool Assign(std::size_t pos, int used) {
    if (pos == order_.size()) return true;
    const int v = order_[pos];
    Mask forbidden = 0;
    for (Mask nb = g_.adj[v]; nb != 0; nb &= nb - 1) {
      const int c = colour_[std::countr_zero(nb)];
      if (c >= 0) forbidden |= Bit(c);
    }
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden & Bit(c)) continue;
      colour_[v] = c;
      if (Assign(pos + 1, std::max(used, c + 1))) return true;
    }
    colour_[v] = -1;
    return false;
  }

  const BitGraph& g_;
  std::vector<int> order_;
  std::vector<int> colour_;
  int k_ = 0;
};

// Depth-first scan over vertices in index order. A vertex may join J when
// fewer than p of its in-neighbours are already in J; adding later vertices
// never changes the count of earlier ones, so this check is complete.
class PseudoIndependentSearch {
 public:
  PseudoIndependentSearch(const BitGraph& g, int p) : g_(g), p_(p) {}

  int MaxSize() {
    best_ = -1;
    mode_ = Mode::kMax;
    Visit(0, 0, 0);
    return best_;
  }

  std::vector<Mask> AllOfSize(int target) {
    found_.clear();
    target_ = target;
    mode_ = Mode::kEnumerate;
    Visit(0, 0, 0);
    return found_;
  }

  Mask best_set() const { return best_set_; }

 private:
  enum class Mode { kMax, kEnumerate };

  void Visit(int v, Mask set, int size) {
    const int remaining = g_.n - v;
    if (mode_ == Mode::kMax) {
      if (size + remaining <= best_) return;
    } else if (size + remaining < target_) {
      return;
    }
    if (v == g_.n) {
      if (mode_ == Mode::kMax) {
        best_ = size;
        best_set_ = set;
      } else if (size == target_) {
        if (static_cast<long>(found_.size()) >= kMaxEnumeratedSets) {
          throw CapacityError("more than " + std::to_string(kMaxEnumeratedSets) +
                              " maximum sets");
        }
        found_.push_back(set);
      }
      return;
    }
    if (std::popcount(g_.in[v] & set) < p_ &&
        (mode_ == Mode::kMax || size < target_)) {
      Visit(v + 1, set | Bit(v), size + 1);
    }
    Visit(v + 1, set, size);
  }

  const BitGraph& g_;
  int p_;
  Mode mode_ = Mode::kMax;
  int best_ = -1;
  Mask best_set_ = 0;
  int target_ = 0;
  std::vector<Mask> found_;
};

void RequirePositiveP(int p) {
  if (p < 1) throw InputError("p: must be a positive integer, got " + std::to_string(p));
}

}  // namespace

InvariantWitness CliqueNumber(const InformationGraph& g, int cap) {
  const BitGraph b = ToBits(g, cap);
  const Mask clique = MaxCliqueSearch(b).Run();
  return {std::popcount(clique), ToVertices(clique), {}};
}

InvariantWitness IndependenceNumber(const InformationGraph& g, int cap) {
  const BitGraph b = ToBits(g, cap, /*complement=*/true);
  const Mask set = MaxCliqueSearch(b).Run();
  return {std::popcount(set), ToVertices(set), {}};
}

InvariantWitness CliqueCoverNumber(const InformationGraph& g, int cap) {
  if (g.n() == 0) {
    ToBits(g, cap);
    return {0, {}, {}};
  }
  // Colour the complement: colour classes are cliques of g.
  const BitGraph h = ToBits(g, cap, /*complement=*/true);
  const Mask seed = MaxCliqueSearch(h).Run();
  const int lower = std::popcount(seed);

  // Seed clique first so its vertices take distinct colours, then by degree.
  std::vector<int> order = [&] {
    std::vector<int> rest;
    std::vector<int> front;
    for (int v = 0; v < h.n; ++v) {
      (seed & Bit(v) ? front : rest).push_back(v);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
      return std::popcount(h.adj[a]) > std::popcount(h.adj[b]);
    });
    front.insert(front.end(), rest.begin(), rest.end());
    return front;
  }();

  Colouring colouring(h, std::move(order));
  int k = lower;
  while (!colouring.TryColour(k)) ++k;

  InvariantWitness out;
  out.value = k;
  out.partition.assign(k, {});
  for (int v = 0; v < h.n; ++v) out.partition[colouring.colours()[v]].push_back(v + 1);
  std::sort(out.partition.begin(), out.partition.end());
  return out;
}

std::vector<std::vector<int>> MaximumIndependentSets(const InformationGraph& g,
                                                     int cap) {
  const int alpha = IndependenceNumber(g, cap).value;
  const BitGraph b = ToBits(g, cap);
  std::vector<std::vector<int>> out;
  for (Mask m : PseudoIndependentSearch(b, 1).AllOfSize(alpha)) {
    out.push_back(ToVertices(m));
  }
  return out;
}

std::optional<SiblingWitness> FindSibling(const InformationGraph& g, int cap) {
  for (const auto& set : MaximumIndependentSets(g, cap)) {
    for (int w = 1; w <= g.n(); ++w) {
      for (int i : set) {
        if (i < w && g.HasEdge(i, w)) return SiblingWitness{w, set, i};
      }
    }
  }
  return std::nullopt;
}

InvariantWitness PseudoIndependenceNumber(const InformationGraph& g, int p,
                                          int cap) {
  RequirePositiveP(p);
  const BitGraph b = ToBits(g, cap);
  PseudoIndependentSearch search(b, p);
  const int size = search.MaxSize();
  return {size, ToVertices(search.best_set()), {}};
}

std::vector<std::vector<int>> MaximumPseudoIndependentSets(
    const InformationGraph& g, int p, int cap) {
  RequirePositiveP(p);
  const BitGraph b = ToBits(g, cap);
  PseudoIndependentSearch search(b, p);
  const int size = search.MaxSize();
  std::vector<std::vector<int>> out;
  for (Mask m : search.AllOfSize(size)) out.push_back(ToVertices(m));
  return out;
}

std::optional<PSiblingWitness> FindPSibling(const InformationGraph& g, int p,
                                            int cap) {
  for (const auto& set : MaximumPseudoIndependentSets(g, p, cap)) {
    for (int w = 1; w <= g.n(); ++w) {
      if (std::binary_search(set.begin(), set.end(), w)) continue;
      std::vector<int> observed;
      for (int j : g.InNeighbors(w)) {
        if (std::binary_search(set.begin(), set.end(), j)) observed.push_back(j);
      }
      if (static_cast<int>(observed.size()) >= p) {
        return PSiblingWitness{w, set, std::move(observed)};
      }
    }
  }
  return std::nullopt;
}

LemmaCheck VerifyNoDisjointMaxSets(const InformationGraph& g, int p, int cap) {
  if (FindPSibling(g, p, cap)) return LemmaCheck::kNotApplicable;
  const BitGraph b = ToBits(g, cap);
  PseudoIndependentSearch search(b, p);
  const std::vector<Mask> sets = search.AllOfSize(search.MaxSize());
  for (std::size_t x = 0; x < sets.size(); ++x)
    for (std::size_t y = x + 1; y < sets.size(); ++y)
      if ((sets[x] & sets[y]) == 0) return LemmaCheck::kViolated;
  return LemmaCheck::kHolds;
}

bool IsClique(const InformationGraph& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!g.HasEdge(vertices[a], vertices[b])) return false;
  return true;
}

bool IsIndependentSet(const InformationGraph& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || g.HasEdge(vertices[a], vertices[b]))
        return false;
  return true;
}

bool IsPseudoIndependent(const InformationGraph& g, const std::vector<int>& vertices,
                         int p) {
  for (int j : vertices) {
    int inside = 0;
    for (int i : g.InNeighbors(j)) {
      inside += std::find(vertices.begin(), vertices.end(), i) != vertices.end();
    }
    if (inside >= p) return false;
  }
  return true;
}

bool IsCliqueCover(const InformationGraph& g,
                   const std::vector<std::vector<int>>& partition) {
  std::vector<int> seen(g.n() + 1, 0);
  for (const auto& part : partition) {
    if (part.empty() || !IsClique(g, part)) return false;
    for (int v : part) {
      if (v < 1 || v > g.n() || seen[v]++) return false;
    }
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](int c) { return c == 1; });
}

}  // namespace parsub
