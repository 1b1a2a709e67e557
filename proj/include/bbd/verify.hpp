#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bbd/hamilton.hpp"

namespace bbd {

struct SampledUniverse {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  double density = 0.0;
};

struct CounterexampleRecord {
  std::uint64_t id = 0;  // instance counter (exhaustive) or sample index
  std::vector<Arc> arcs;
};

/// Aggregate of one sweep over a universe of digraphs. Invariant:
/// hamiltonian + counterexamples + exceptions_found == hypotheses_met.
/// All counters and lists merge associatively over index ranges, so the
/// report is byte-identical for any worker count.
struct VerificationReport {
  int a = 0;
  bool exhaustive = true;
  std::optional<SampledUniverse> sample;
  std::uint64_t instances = 0;
  std::uint64_t hypotheses_met = 0;
  std::uint64_t hamiltonian = 0;
  std::vector<CounterexampleRecord> counterexamples;
  std::uint64_t exceptions_found = 0;  // a=2 only: K2,2 minus one 2-cycle
  std::vector<std::uint64_t> exception_ids;
  std::uint64_t fallback_invocations = 0;
  std::uint64_t stalled_factors = 0;
  std::uint64_t claim1_violations = 0;
  std::uint64_t lemma2_violations = 0;  // non-Ham instance with a lonely vertex
  std::uint64_t lemma3_violations = 0;  // non-Ham instance with min degree < a
  std::uint64_t cycle_validation_failures = 0;
  std::uint64_t classification_conflicts = 0;  // constructor vs oracle disagreement
};

enum class InstanceOutcome { HypothesesUnmet, Hamiltonian, Exception, Counterexample };

/// Observer over classified instances. With jobs > 1 it is invoked from
/// worker threads; callers needing ordered or exclusive access should run
/// with jobs == 1 or synchronize.
using InstanceObserver = std::function<void(std::uint64_t id, InstanceOutcome)>;

/// Number of instances in the exhaustive universe: 2^(2a^2).
std::uint64_t universe_size(int a);

/// Decodes an instance counter into a digraph. Bit layout (LSB first):
/// bits [0, a^2) are the V1->V2 arcs row-major (bit k: x(k/a+1) -> y(k%a+1)),
/// bits [a^2, 2a^2) the V2->V1 arcs row-major (bit a^2+k: y(k/a+1) -> x(k%a+1)).
BipartiteDigraph instance_from_id(int a, std::uint64_t id);

/// The digraph of sample `index` of the stream (seed, density): every one
/// of the 2a^2 possible arcs is present independently with probability
/// `density`, drawn from a per-index block of one SplitMix64 sequence, so
/// the instance depends only on (a, seed, density, index).
BipartiteDigraph sample_instance(int a, std::uint64_t seed, double density,
                                 std::uint64_t index);

/// Sweeps every digraph of the a <= 3 universe (2 <= a <= 3): instances
/// passing both hypotheses (strong connectivity and the degree condition)
/// are classified through find_hamiltonian, whose fallback is the exact
/// backtracking oracle; non-Hamiltonian survivors are re-verified by a
/// fresh oracle call before being reported.
VerificationReport enumerate_universe(int a, int jobs = 1,
                                      const InstanceObserver& observer = {});

/// Randomized sweep for 4 <= a <= 12 at the given arc density.
VerificationReport sample_universe(int a, std::uint64_t count,
                                   std::uint64_t seed, double density,
                                   int jobs = 1,
                                   const InstanceObserver& observer = {});

/// True iff D is one of the four labeled order-4 digraphs obtained from
/// the complete bipartite digraph on 2+2 vertices by deleting one 2-cycle.
bool is_a2_exception(const BipartiteDigraph& d);

/// Line-oriented text form; identical invocations (and any worker count)
/// produce identical bytes.
std::string format_report(const VerificationReport& report);

}  // namespace bbd
