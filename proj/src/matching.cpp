#include "bbd/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbd {

namespace {

// Kuhn's algorithm state. Targets are indexed locally 0..a-1.
struct MatchState {
  int a = 0;
  VertexId source_base = 0;
  VertexId target_base = 0;
  std::vector<VertexId> target_of_source;  // source local -> target vertex or -1
  std::vector<VertexId> source_of_target;  // target local -> source vertex or -1
};

bool try_augment(const BipartiteDigraph& d, MatchState& m, VertexId source,
                 std::vector<bool>& visited) {
  for (VertexId t : d.out_neighbours(source)) {
    const int tl = t - m.target_base;
    if (visited[tl]) continue;
    visited[tl] = true;
    if (m.source_of_target[tl] == -1 ||
        try_augment(d, m, m.source_of_target[tl], visited)) {
      m.source_of_target[tl] = source;
      m.target_of_source[source - m.source_base] = t;
      return true;
    }
  }
  return false;
}

MatchState compute_matching(const BipartiteDigraph& d, MatchDirection dir) {
  MatchState m;
  m.a = d.half_order();
  m.source_base = dir == MatchDirection::V1ToV2 ? 0 : m.a;
  m.target_base = dir == MatchDirection::V1ToV2 ? m.a : 0;
  m.target_of_source.assign(m.a, -1);
  m.source_of_target.assign(m.a, -1);
  std::vector<bool> visited(m.a);
  for (VertexId s = m.source_base; s < m.source_base + m.a; ++s) {
    std::fill(visited.begin(), visited.end(), false);
    try_augment(d, m, s, visited);
  }
  return m;
}

std::optional<HallViolator> violator_from(const BipartiteDigraph& d,
                                          MatchDirection dir,
                                          const MatchState& m) {
  int matched = 0;
  for (VertexId t : m.target_of_source)
    if (t != -1) ++matched;
  if (matched == m.a) return std::nullopt;

  // Alternating forest from all unmatched sources. Every reachable target
  // is matched (otherwise the matching was not maximum) and its partner
  // joins the source set.
  std::vector<bool> in_s(m.a, false), in_t(m.a, false);
  std::vector<VertexId> queue;
  for (int i = 0; i < m.a; ++i)
    if (m.target_of_source[i] == -1) {
      in_s[i] = true;
      queue.push_back(m.source_base + i);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (VertexId t : d.out_neighbours(queue[head])) {
      const int tl = t - m.target_base;
      if (in_t[tl]) continue;
      in_t[tl] = true;
      const VertexId owner = m.source_of_target[tl];
      if (owner == -1)
        throw std::logic_error("augmenting path missed by matching search");
      if (!in_s[owner - m.source_base]) {
        in_s[owner - m.source_base] = true;
        queue.push_back(owner);
      }
    }
  }

  HallViolator v;
  v.direction = dir;
  for (int i = 0; i < m.a; ++i) {
    if (in_s[i]) v.witness_set.push_back(m.source_base + i);
    if (in_t[i]) v.image.push_back(m.target_base + i);
  }
  return v;
}

}  // namespace

std::string to_string(MatchDirection dir) {
  return dir == MatchDirection::V1ToV2 ? "V1->V2" : "V2->V1";
}

Matching max_matching(const BipartiteDigraph& d, MatchDirection dir) {
  MatchState m = compute_matching(d, dir);
  Matching result;
  result.direction = dir;
  for (int i = 0; i < m.a; ++i)
    if (m.target_of_source[i] != -1)
      result.pairs.emplace_back(m.source_base + i, m.target_of_source[i]);
  return result;
}

std::optional<HallViolator> hall_violator(const BipartiteDigraph& d,
                                          MatchDirection dir) {
  MatchState m = compute_matching(d, dir);
  return violator_from(d, dir, m);
}

std::variant<CycleFactor, HallViolator> cycle_factor(
    const BipartiteDigraph& d) {
  MatchState m1 = compute_matching(d, MatchDirection::V1ToV2);
  if (auto v = violator_from(d, MatchDirection::V1ToV2, m1)) return *v;
  MatchState m2 = compute_matching(d, MatchDirection::V2ToV1);
  if (auto v = violator_from(d, MatchDirection::V2ToV1, m2)) return *v;

  const int a = d.half_order();
  CycleFactor factor;
  std::vector<bool> seen(a, false);
  for (VertexId x0 = 0; x0 < a; ++x0) {
    if (seen[x0]) continue;
    Cycle cycle;
    VertexId x = x0;
    while (!seen[x]) {
      seen[x] = true;
      const VertexId y = m1.target_of_source[x];
      cycle.push_back(x);
      cycle.push_back(y);
      x = m2.target_of_source[y - a];
    }
    factor.cycles.push_back(std::move(cycle));
  }
  canonicalize(factor);
  return factor;
}

void canonicalize(CycleFactor& factor) {
  for (Cycle& cycle : factor.cycles) {
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
  }
  std::sort(factor.cycles.begin(), factor.cycles.end(),
            [](const Cycle& a, const Cycle& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.front() < b.front();
            });
}

std::optional<std::string> validate_factor(const BipartiteDigraph& d,
                                           const CycleFactor& factor) {
  const int n = d.order();
  std::vector<bool> covered(n, false);
  for (const Cycle& cycle : factor.cycles) {
    if (cycle.size() < 2 || cycle.size() % 2 != 0)
      return "cycle length must be even and at least 2";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const VertexId u = cycle[i];
      const VertexId v = cycle[(i + 1) % cycle.size()];
      if (u < 0 || u >= n) return "vertex out of range";
      if (covered[u]) return "vertex covered twice";
      covered[u] = true;
      if (!d.has_arc(u, v))
        return "missing arc " + vertex_name(u, d.half_order()) + "->" +
               vertex_name(v, d.half_order());
      if (side_of(u, d.half_order()) == side_of(v, d.half_order()))
        return "cycle does not alternate partite sets";
    }
    if (*std::min_element(cycle.begin(), cycle.end()) != cycle.front())
      return "cycle not rotated to its smallest vertex";
  }
  for (VertexId v = 0; v < n; ++v)
    if (!covered[v]) return "vertex " + vertex_name(v, d.half_order()) + " uncovered";
  for (std::size_t i = 1; i < factor.cycles.size(); ++i) {
    const Cycle& prev = factor.cycles[i - 1];
    const Cycle& cur = factor.cycles[i];
    if (prev.size() > cur.size() ||
        (prev.size() == cur.size() && prev.front() > cur.front()))
      return "cycles not sorted by (length, smallest vertex)";
  }
  return std::nullopt;
}

bool is_hamiltonian_cycle(const BipartiteDigraph& d, const Cycle& cycle) {
  if (static_cast<int>(cycle.size()) != d.order()) return false;
  std::vector<bool> seen(d.order(), false);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VertexId u = cycle[i];
    if (u < 0 || u >= d.order() || seen[u]) return false;
    seen[u] = true;
    if (!d.has_arc(u, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace bbd
