#pragma once

#include <optional>
#include <vector>

#include "bbd/matching.hpp"

namespace bbd {

/// Cycle-merge moves. Each fuses two cycles of a factor into one:
///
///   exchange  — for u_i on C_i and u_j on C_j in the same partite set,
///               with arcs u_i->succ(u_j) and u_j->succ(u_i) present,
///               swap the two successor arcs.
///   splice    — for u on C_j and p on C_i, with arcs u->p and
///               pred_Ci(p)->succ_Cj(u) present, replace the arc
///               u->succ_Cj(u) by a path through all of C_i.
///   rotation  — C_i is a 2-cycle [p,q] and |C_j| >= 4; a vertex t on C_j
///               carries symmetric arcs with q, and the arcs succ(t)->p,
///               p->pred(t), t->pred(t), pred2(t)->succ(t),
///               pred(t)->succ2(t) allow re-threading C_j so that p and q
///               are absorbed while t's neighbourhood is traversed in a
///               rotated order.
enum class MergeKind { Exchange, Splice, Rotation };

struct MergeMove {
  MergeKind kind = MergeKind::Exchange;
  int cycle_i = -1;  // exchange: cycle of anchor_a; splice/rotation: the inserted cycle
  int cycle_j = -1;
  VertexId anchor_a = -1;  // exchange: u_i; splice: u on C_j; rotation: t on C_j
  VertexId anchor_b = -1;  // exchange: u_j; splice: p on C_i; rotation: unused (-1)

  bool operator==(const MergeMove&) const = default;
};

/// First applicable move under the deterministic scan: kinds in the order
/// exchange, splice, rotation; within a kind, lexicographic on
/// (cycle_i, cycle_j, anchors) with anchor vertices in ascending index
/// order. Requires a valid factor with at least two cycles.
std::optional<MergeMove> find_merge(const BipartiteDigraph& d,
                                    const CycleFactor& factor);

/// Applies the move, re-verifying every arc it uses against D (throws
/// std::logic_error if one is missing: that signals a catalog/scan bug).
/// The result has exactly one cycle fewer and is canonical.
CycleFactor apply_merge(const BipartiteDigraph& d, const CycleFactor& factor,
                        const MergeMove& move);

/// For every cycle pair admitting no exchange move, the number of arcs
/// between the two cycles is at most |C_i|*|C_j|/2. This holds for every
/// stalled factor; a violation signals an implementation bug.
bool claim1_bound_holds(const BipartiteDigraph& d, const CycleFactor& factor);

enum class Verdict { Hamiltonian, NonHamiltonian, HypothesesUnmet };

enum class CertificateKind {
  None,
  HallViolator,          // no cycle factor exists
  ExhaustedSearch,       // backtracking search exhausted without a cycle
  NotStronglyConnected,  // hypothesis fails (and no Hamiltonian cycle can exist)
  UndecidedAtScale,      // greedy stalled and order > 24, fallback not run
};

struct HamiltonResult {
  Verdict verdict = Verdict::NonHamiltonian;
  std::optional<Cycle> cycle;
  CertificateKind certificate = CertificateKind::None;
  std::optional<HallViolator> violator;  // present iff certificate == HallViolator
  // Merge derivation: replaying move_log on the canonical initial factor
  // reproduces `cycle` whenever the merge phase produced it. Cleared when
  // the fallback search found the cycle instead (used_fallback is set).
  std::vector<MergeMove> move_log;
  ConditionAReport condition_a;  // recorded regardless of the verdict
  bool strongly_connected = false;
  bool used_fallback = false;
  bool greedy_stalled = false;
  bool claim1_ok = true;  // Claim-1 bound on the stalled factor, if any
};

/// Decides Hamiltonicity of D (a >= 2, else std::invalid_argument):
/// cycle factor -> greedy merging -> exact backtracking fallback for
/// order <= 24. Hypothesis status (strong connectivity, the degree
/// condition) is recorded but only strong connectivity changes the
/// verdict class, since a digraph that is not strongly connected cannot
/// be Hamiltonian.
HamiltonResult find_hamiltonian(const BipartiteDigraph& d);

}  // namespace bbd
