#include "bbd/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace bbd {

namespace {

constexpr int kHamiltonianCap = 24;
constexpr int kFactorCap = 16;

struct SmallAdj {
  int n = 0;
  std::uint32_t out[kHamiltonianCap] = {};
  std::uint32_t in[kHamiltonianCap] = {};
};

SmallAdj small_adjacency(const BipartiteDigraph& d) {
  SmallAdj adj;
  adj.n = d.order();
  for (VertexId u = 0; u < adj.n; ++u)
    for (VertexId v : d.out_neighbours(u)) {
      adj.out[u] |= 1u << v;
      adj.in[v] |= 1u << u;
    }
  return adj;
}

bool extend(const SmallAdj& adj, std::vector<VertexId>& path,
            std::uint32_t visited) {
  const std::uint32_t all = (adj.n == 32) ? ~0u : ((1u << adj.n) - 1);
  const VertexId last = path.back();
  if (static_cast<int>(path.size()) == adj.n) return (adj.out[last] >> 0) & 1u;

  const std::uint32_t unvisited = all & ~visited;
  // feasibility: every unvisited vertex still needs an in-arc from
  // {unvisited, last} and an out-arc into {unvisited, start}
  std::uint32_t rest = unvisited;
  while (rest) {
    const int w = std::countr_zero(rest);
    rest &= rest - 1;
    if (!(adj.in[w] & (unvisited | (1u << last)))) return false;
    if (!(adj.out[w] & (unvisited | 1u))) return false;
  }

  std::uint32_t candidates = adj.out[last] & unvisited;
  while (candidates) {
    const int w = std::countr_zero(candidates);
    candidates &= candidates - 1;
    path.push_back(w);
    if (extend(adj, path, visited | (1u << w))) return true;
    path.pop_back();
  }
  return false;
}

bool has_perfect_bijection(const BipartiteDigraph& d, bool v1_to_v2) {
  const int a = d.half_order();
  std::vector<int> perm(a);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a && ok; ++i) {
      const VertexId src = v1_to_v2 ? i : a + i;
      const VertexId dst = v1_to_v2 ? a + perm[i] : perm[i];
      ok = d.has_arc(src, dst);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::optional<Cycle> brute_force_hamiltonian(const BipartiteDigraph& d) {
  if (d.order() > kHamiltonianCap)
    throw std::invalid_argument("brute_force_hamiltonian: order exceeds 24");
  SmallAdj adj = small_adjacency(d);
  std::vector<VertexId> path{0};
  if (extend(adj, path, 1u)) return path;
  return std::nullopt;
}

bool brute_force_cycle_factor(const BipartiteDigraph& d) {
  if (d.order() > kFactorCap)
    throw std::invalid_argument("brute_force_cycle_factor: order exceeds 16");
  return has_perfect_bijection(d, true) && has_perfect_bijection(d, false);
}

}  // namespace bbd
