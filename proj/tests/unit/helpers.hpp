#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "bbd/digraph.hpp"
#include "bbd/rng.hpp"

namespace bbd::test {

inline VertexId x(int i) { return i - 1; }
inline VertexId y(int j, int a) { return a + j - 1; }

// x1 -> y1 -> x2 -> y2 -> ... -> ya -> x1
inline BipartiteDigraph directed_cycle(int a) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= a; ++i) {
    arcs.emplace_back(x(i), y(i, a));
    arcs.emplace_back(y(i, a), x(i % a + 1));
  }
  return {a, arcs};
}

// x_i <-> y_i for every i (a disjoint symmetric 2-cycles)
inline BipartiteDigraph symmetric_pairs(int a) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= a; ++i) {
    arcs.emplace_back(x(i), y(i, a));
    arcs.emplace_back(y(i, a), x(i));
  }
  return {a, arcs};
}

// K2,2 minus the 2-cycle [x2,y1]: the unique (up to labeling) strongly
// connected order-4 digraph meeting the degree condition yet non-Hamiltonian
inline BipartiteDigraph a2_exception() {
  return {2, {{0, 2}, {2, 0}, {0, 3}, {3, 0}, {1, 3}, {3, 1}}};
}

inline BipartiteDigraph random_digraph(int a, double density, SplitMix64& rng) {
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < a; ++u)
    for (VertexId v = a; v < 2 * a; ++v) {
      if (rng.next_double() < density) arcs.emplace_back(u, v);
      if (rng.next_double() < density) arcs.emplace_back(v, u);
    }
  return {a, arcs};
}

// Independent route to the condition-A verdict: all-pairs scan straight
// from the definition, same witness order (sum, u, v, shared, kind).
inline ConditionAReport condition_a_all_pairs(const BipartiteDigraph& d) {
  const int n = d.order();
  const int required = 3 * d.half_order();
  std::optional<ConditionAWitness> best;
  auto rank = [](const ConditionAWitness& w) {
    return std::tuple(w.degree_sum, w.u, w.v, w.shared,
                      w.kind == SharedKind::InNeighbour ? 0 : 1);
  };
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      const int sum = d.degree(u).total + d.degree(v).total;
      if (sum >= required) continue;
      for (VertexId w = 0; w < n; ++w) {
        if (d.has_arc(w, u) && d.has_arc(w, v)) {
          ConditionAWitness cand{u, v, sum, w, SharedKind::InNeighbour};
          if (!best || rank(cand) < rank(*best)) best = cand;
        }
        if (d.has_arc(u, w) && d.has_arc(v, w)) {
          ConditionAWitness cand{u, v, sum, w, SharedKind::OutNeighbour};
          if (!best || rank(cand) < rank(*best)) best = cand;
        }
      }
    }
  return {!best.has_value(), best};
}

// Brute-force maximum matching size by assign-or-skip recursion.
inline int brute_force_max_matching(const BipartiteDigraph& d, bool v1_to_v2) {
  const int a = d.half_order();
  const VertexId source_base = v1_to_v2 ? 0 : a;
  std::vector<bool> taken(a, false);
  auto rec = [&](auto&& self, int s) -> int {
    if (s == a) return 0;
    int best = self(self, s + 1);  // skip source s
    for (VertexId t : d.out_neighbours(source_base + s)) {
      const int tl = t % a;
      if (taken[tl]) continue;
      taken[tl] = true;
      best = std::max(best, 1 + self(self, s + 1));
      taken[tl] = false;
    }
    return best;
  };
  return rec(rec, 0);
}

}  // namespace bbd::test
