#pragma once

#include <optional>

#include "bbd/matching.hpp"

namespace bbd {

/// Exact backtracking search, capped at order 24. Deterministic: starts at
/// vertex 0 and extends by ascending neighbour index, so the returned cycle
/// is a reproducible golden value. Prunes a branch as soon as some
/// unvisited vertex can no longer receive an in-arc from
/// {unvisited, path end} or send an out-arc into {unvisited, vertex 0}.
std::optional<Cycle> brute_force_hamiltonian(const BipartiteDigraph& d);

/// Cycle-factor existence by exhausting all a! bijections in each
/// direction, capped at order 16.
bool brute_force_cycle_factor(const BipartiteDigraph& d);

}  // namespace bbd
