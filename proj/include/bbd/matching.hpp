#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bbd/digraph.hpp"

namespace bbd {

enum class MatchDirection { V1ToV2, V2ToV1 };

std::string to_string(MatchDirection dir);  // "V1->V2" / "V2->V1"

struct Matching {
  MatchDirection direction = MatchDirection::V1ToV2;
  std::vector<Arc> pairs;  // sorted by source; each pair is an arc of D

  int size() const { return static_cast<int>(pairs.size()); }
  bool perfect(int a) const { return size() == a; }
};

/// Koenig certificate that no perfect matching exists in `direction`:
/// a source-side set S with |N+(S)| < |S| (image = N+(S)).
struct HallViolator {
  MatchDirection direction = MatchDirection::V1ToV2;
  std::vector<VertexId> witness_set;  // S, sorted
  std::vector<VertexId> image;        // N+(S), sorted
};

/// Directed cycle as its vertex sequence [v1, ..., vm]; consecutive
/// vertices (and last -> first) are arcs.
using Cycle = std::vector<VertexId>;

/// Vertex-disjoint cycles covering all of V(D). Kept canonical: each cycle
/// rotated to start at its smallest vertex, cycles sorted by
/// (length, smallest vertex).
struct CycleFactor {
  std::vector<Cycle> cycles;

  int cycle_count() const { return static_cast<int>(cycles.size()); }
};

/// Maximum matching in the given orientation. Deterministic: augmenting
/// paths are searched from sources in ascending index order, scanning
/// neighbours in ascending index order.
Matching max_matching(const BipartiteDigraph& d, MatchDirection dir);

/// Empty iff a perfect matching exists. Otherwise the violator extracted
/// from the alternating forest grown from every unmatched source of the
/// final maximum matching.
std::optional<HallViolator> hall_violator(const BipartiteDigraph& d,
                                          MatchDirection dir);

/// Cycle factor from the two perfect matchings M1 (V1->V2) and M2 (V2->V1):
/// cycles are the orbits of x -> M2(M1(x)), traced from the smallest
/// unvisited V1 vertex. If either matching is imperfect, returns the
/// blocking violator (V1->V2 is checked first).
std::variant<CycleFactor, HallViolator> cycle_factor(const BipartiteDigraph& d);

void canonicalize(CycleFactor& factor);

/// Full validity check (arcs present, disjoint cover of V, even alternating
/// cycles, canonical order). Returns a description of the first defect, or
/// nullopt if valid.
std::optional<std::string> validate_factor(const BipartiteDigraph& d,
                                           const CycleFactor& factor);

/// Cycle visiting every vertex exactly once with all arcs present.
bool is_hamiltonian_cycle(const BipartiteDigraph& d, const Cycle& cycle);

}  // namespace bbd
