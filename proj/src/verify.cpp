#include "bbd/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "bbd/oracle.hpp"
#include "bbd/rng.hpp"

namespace bbd {

namespace {

// Every vertex shares a common in- or out-neighbour with some other vertex.
bool every_vertex_paired(const BipartiteDigraph& d) {
  const int n = d.order();
  for (VertexId u = 0; u < n; ++u) {
    bool paired = false;
    for (VertexId w : d.out_neighbours(u)) {
      // w is a common out-neighbour of u and any other dominator of w
      if (d.degree(w).in >= 2) {
        paired = true;
        break;
      }
    }
    if (!paired)
      for (VertexId w : d.in_neighbours(u))
        if (d.degree(w).out >= 2) {
          paired = true;
          break;
        }
    if (!paired) return false;
  }
  return true;
}

int min_degree(const BipartiteDigraph& d) {
  int best = 2 * d.half_order() + 1;
  for (VertexId v = 0; v < d.order(); ++v)
    best = std::min(best, d.degree(v).total);
  return best;
}

struct Partial {
  std::uint64_t hypotheses_met = 0;
  std::uint64_t hamiltonian = 0;
  std::vector<CounterexampleRecord> counterexamples;
  std::uint64_t exceptions_found = 0;
  std::vector<std::uint64_t> exception_ids;
  std::uint64_t fallback_invocations = 0;
  std::uint64_t stalled_factors = 0;
  std::uint64_t claim1_violations = 0;
  std::uint64_t lemma2_violations = 0;
  std::uint64_t lemma3_violations = 0;
  std::uint64_t cycle_validation_failures = 0;
  std::uint64_t classification_conflicts = 0;
};

void classify_into(const BipartiteDigraph& d, std::uint64_t id, Partial& p,
                   const InstanceObserver& observer) {
  const bool sc = is_strongly_connected(d);
  const ConditionAReport cond_a = check_condition_a(d);
  if (!sc || !cond_a.holds) {
    if (observer) observer(id, InstanceOutcome::HypothesesUnmet);
    return;
  }
  ++p.hypotheses_met;

  HamiltonResult result = find_hamiltonian(d);
  if (result.used_fallback) ++p.fallback_invocations;
  if (result.greedy_stalled) {
    ++p.stalled_factors;
    if (!result.claim1_ok) ++p.claim1_violations;
  }

  if (result.verdict == Verdict::Hamiltonian) {
    if (!result.cycle || !is_hamiltonian_cycle(d, *result.cycle))
      ++p.cycle_validation_failures;
    ++p.hamiltonian;
    if (observer) observer(id, InstanceOutcome::Hamiltonian);
    return;
  }

  // non-Hamiltonian candidate: the oracle has the final word
  if (auto oracle_cycle = brute_force_hamiltonian(d)) {
    ++p.classification_conflicts;
    ++p.hamiltonian;
    if (observer) observer(id, InstanceOutcome::Hamiltonian);
    return;
  }

  if (!every_vertex_paired(d)) ++p.lemma2_violations;
  if (min_degree(d) < d.half_order()) ++p.lemma3_violations;

  if (d.half_order() == 2 && is_a2_exception(d)) {
    ++p.exceptions_found;
    p.exception_ids.push_back(id);
    if (observer) observer(id, InstanceOutcome::Exception);
  } else {
    p.counterexamples.push_back({id, d.arcs()});
    if (observer) observer(id, InstanceOutcome::Counterexample);
  }
}

void merge_into(VerificationReport& report, Partial&& p) {
  report.hypotheses_met += p.hypotheses_met;
  report.hamiltonian += p.hamiltonian;
  for (auto& c : p.counterexamples)
    report.counterexamples.push_back(std::move(c));
  report.exceptions_found += p.exceptions_found;
  for (auto id : p.exception_ids) report.exception_ids.push_back(id);
  report.fallback_invocations += p.fallback_invocations;
  report.stalled_factors += p.stalled_factors;
  report.claim1_violations += p.claim1_violations;
  report.lemma2_violations += p.lemma2_violations;
  report.lemma3_violations += p.lemma3_violations;
  report.cycle_validation_failures += p.cycle_validation_failures;
  report.classification_conflicts += p.classification_conflicts;
}

template <typename MakeInstance>
void run_sweep(VerificationReport& report, std::uint64_t total, int jobs,
               const MakeInstance& make, const InstanceObserver& observer) {
  jobs = std::max(1, jobs);
  const std::uint64_t chunk = (total + jobs - 1) / std::uint64_t(jobs);
  std::vector<Partial> partials(jobs);

  auto work = [&](int worker) {
    const std::uint64_t lo = worker * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    for (std::uint64_t id = lo; id < hi; ++id)
      classify_into(make(id), id, partials[worker], observer);
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  // merge in range order: aggregates independent of the worker count
  for (auto& p : partials) merge_into(report, std::move(p));
}

}  // namespace

std::uint64_t universe_size(int a) {
  const int bits = 2 * a * a;
  if (a < 1 || bits >= 64)
    throw std::invalid_argument("universe_size: 2a^2 must fit in 63 bits");
  return std::uint64_t{1} << bits;
}

BipartiteDigraph instance_from_id(int a, std::uint64_t id) {
  if (a < 1 || a > 5) throw std::invalid_argument("instance_from_id: a out of range");
  if (id >= universe_size(a))
    throw std::invalid_argument("instance_from_id: id out of range");
  std::vector<Arc> arcs;
  const int aa = a * a;
  for (int k = 0; k < aa; ++k)
    if ((id >> k) & 1u) arcs.emplace_back(k / a, a + k % a);
  for (int k = 0; k < aa; ++k)
    if ((id >> (aa + k)) & 1u) arcs.emplace_back(a + k / a, k % a);
  return {a, arcs};
}

BipartiteDigraph sample_instance(int a, std::uint64_t seed, double density,
                                 std::uint64_t index) {
  const std::uint64_t slots = std::uint64_t(2) * a * a;
  SplitMix64 rng(seed + index * slots * SplitMix64::kGamma);
  std::vector<Arc> arcs;
  const int aa = a * a;
  for (int k = 0; k < aa; ++k)
    if (rng.next_double() < density) arcs.emplace_back(k / a, a + k % a);
  for (int k = 0; k < aa; ++k)
    if (rng.next_double() < density) arcs.emplace_back(a + k / a, k % a);
  return {a, arcs};
}

VerificationReport enumerate_universe(int a, int jobs,
                                      const InstanceObserver& observer) {
  if (a < 2 || a > 3)
    throw std::invalid_argument("enumerate_universe: a must be 2 or 3");
  VerificationReport report;
  report.a = a;
  report.exhaustive = true;
  report.instances = universe_size(a);
  run_sweep(
      report, report.instances, jobs,
      [a](std::uint64_t id) { return instance_from_id(a, id); }, observer);
  return report;
}

VerificationReport sample_universe(int a, std::uint64_t count,
                                   std::uint64_t seed, double density,
                                   int jobs, const InstanceObserver& observer) {
  if (a < 4 || a > 12)
    throw std::invalid_argument("sample_universe: a must be in [4, 12]");
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("sample_universe: density must be in [0, 1]");
  VerificationReport report;
  report.a = a;
  report.exhaustive = false;
  report.sample = SampledUniverse{count, seed, density};
  report.instances = count;
  run_sweep(
      report, count, jobs,
      [&](std::uint64_t i) { return sample_instance(a, seed, density, i); },
      observer);
  return report;
}

bool is_a2_exception(const BipartiteDigraph& d) {
  if (d.half_order() != 2 || d.arc_count() != 6) return false;
  std::vector<Arc> missing;
  for (VertexId x = 0; x < 2; ++x)
    for (VertexId y = 2; y < 4; ++y) {
      if (!d.has_arc(x, y)) missing.emplace_back(x, y);
      if (!d.has_arc(y, x)) missing.emplace_back(y, x);
    }
  return missing.size() == 2 && missing[0].first == missing[1].second &&
         missing[0].second == missing[1].first;
}

std::string format_report(const VerificationReport& report) {
  std::string out;
  auto line = [&out](const std::string& s) {
    out += s;
    out += '\n';
  };
  line("bbd-report 1");
  line("a: " + std::to_string(report.a));
  if (report.exhaustive) {
    line("universe: exhaustive");
  } else {
    char buf[128];
    std::snprintf(buf, sizeof buf, "universe: sampled count=%llu seed=%llu density=%g",
                  static_cast<unsigned long long>(report.sample->count),
                  static_cast<unsigned long long>(report.sample->seed),
                  report.sample->density);
    line(buf);
  }
  line("instances: " + std::to_string(report.instances));
  line("hypotheses_met: " + std::to_string(report.hypotheses_met));
  line("hamiltonian: " + std::to_string(report.hamiltonian));
  line("exceptions: " + std::to_string(report.exceptions_found) +
       ", counterexamples: " + std::to_string(report.counterexamples.size()));
  for (auto id : report.exception_ids)
    line("exception_id: " + std::to_string(id));
  for (const auto& c : report.counterexamples) {
    std::string arcs;
    for (const auto& [u, v] : c.arcs) {
      if (!arcs.empty()) arcs += ' ';
      arcs += vertex_name(u, report.a) + "->" + vertex_name(v, report.a);
    }
    line("counterexample_id: " + std::to_string(c.id) + " arcs: " + arcs);
  }
  line("fallback_invocations: " + std::to_string(report.fallback_invocations));
  line("stalled_factors: " + std::to_string(report.stalled_factors));
  line("claim1_violations: " + std::to_string(report.claim1_violations));
  line("lemma2_violations: " + std::to_string(report.lemma2_violations));
  line("lemma3_violations: " + std::to_string(report.lemma3_violations));
  line("cycle_validation_failures: " +
       std::to_string(report.cycle_validation_failures));
  line("classification_conflicts: " +
       std::to_string(report.classification_conflicts));
  return out;
}

}  // namespace bbd
