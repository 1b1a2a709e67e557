#pragma once

#include "bbd/matching.hpp"

namespace bbd {

/// Parameters of the extremal family D(a,l): a >= 3 and 1 <= l < a/2.
/// Vertex layout: R = x1..xl, S = x(l+1)..xa, U = y1..yl, W = y(l+1)..ya.
struct ExtremalParams {
  int a = 0;
  int l = 0;
};

/// The strongly connected, non-Hamiltonian digraph D(a,l) whose arcs are:
///   (a) r <-> y for every r in R and y in V2,
///   (b) u <-> x for every u in U and x in V1 (overlap with (a) stored once),
///   (c) s -> w for every s in S and w in W.
/// Degrees: d(r) = d(u) = 2a, d(s) = d(w) = a + l; arc count a^2 + 2al - l^2.
/// W's only out-neighbours are R, so no perfect matching V2->V1 exists.
BipartiteDigraph gen_extremal(ExtremalParams params);

struct SharpnessReport {
  int a = 0;
  int l = 0;                           // (a-1)/2
  int min_nonadjacent_degree_sum = 0;  // over all non-adjacent pairs
  bool bound_met = false;              // min sum >= 3a - 1
  bool strongly_connected = false;
  HallViolator violator;  // V2->V1, certifies non-Hamiltonicity
};

/// Builds D(a,(a-1)/2) for odd a >= 3 (else std::invalid_argument) and
/// enumerates all non-adjacent vertex pairs: the minimum degree sum comes
/// out at exactly 3a - 1, so the 3a threshold cannot be lowered.
SharpnessReport sharpness_check(int a);

}  // namespace bbd
