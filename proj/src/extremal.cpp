#include "bbd/extremal.hpp"

#include <stdexcept>

namespace bbd {

BipartiteDigraph gen_extremal(ExtremalParams params) {
  const int a = params.a;
  const int l = params.l;
  if (a < 3) throw std::invalid_argument("gen_extremal: a must be >= 3");
  if (l < 1 || 2 * l >= a)
    throw std::invalid_argument("gen_extremal: l must satisfy 1 <= l < a/2");

  std::vector<Arc> arcs;
  // (a) R <-> V2
  for (VertexId r = 0; r < l; ++r)
    for (VertexId y = a; y < 2 * a; ++y) {
      arcs.emplace_back(r, y);
      arcs.emplace_back(y, r);
    }
  // (b) U <-> V1; the R x U portion is already present from (a)
  for (VertexId u = a; u < a + l; ++u)
    for (VertexId x = l; x < a; ++x) {
      arcs.emplace_back(u, x);
      arcs.emplace_back(x, u);
    }
  // (c) S -> W
  for (VertexId s = l; s < a; ++s)
    for (VertexId w = a + l; w < 2 * a; ++w) arcs.emplace_back(s, w);

  return {a, arcs};
}

SharpnessReport sharpness_check(int a) {
  if (a < 3 || a % 2 == 0)
    throw std::invalid_argument("sharpness_check: a must be odd and >= 3");

  SharpnessReport report;
  report.a = a;
  report.l = (a - 1) / 2;
  BipartiteDigraph d = gen_extremal({a, report.l});

  const int n = d.order();
  std::vector<int> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = d.degree(v).total;

  int min_sum = -1;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      const bool adjacent =
          (side_of(u, a) != side_of(v, a)) && (d.has_arc(u, v) || d.has_arc(v, u));
      if (adjacent) continue;
      const int sum = deg[u] + deg[v];
      if (min_sum < 0 || sum < min_sum) min_sum = sum;
    }
  report.min_nonadjacent_degree_sum = min_sum;
  report.bound_met = min_sum >= 3 * a - 1;
  report.strongly_connected = is_strongly_connected(d);

  auto violator = hall_violator(d, MatchDirection::V2ToV1);
  if (!violator)
    throw std::logic_error("sharpness_check: expected Hall violator missing");
  report.violator = std::move(*violator);
  return report;
}

}  // namespace bbd
