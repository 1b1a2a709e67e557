// bbd — balanced bipartite digraph toolkit.
//
// Subcommands: check, hamilton, factor, extremal, random, enumerate, verify.
// Exit codes: 0 verdict positive / success, 1 verdict negative (certified),
// 2 I/O, parse or range error, 3 undecided at scale.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bbd/extremal.hpp"
#include "bbd/hamilton.hpp"
#include "bbd/io.hpp"
#include "bbd/matching.hpp"
#include "bbd/verify.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitUndecided = 3;

bbd::BipartiteDigraph load(const std::string& path) {
  if (path == "-") return bbd::read_digraph(std::cin);
  return bbd::read_digraph_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << text;
}

std::string violator_text(const bbd::HallViolator& v, int a) {
  std::string s = "hall-violator " + bbd::to_string(v.direction) + " S={";
  for (std::size_t i = 0; i < v.witness_set.size(); ++i) {
    if (i) s += ',';
    s += bbd::vertex_name(v.witness_set[i], a);
  }
  s += '}';
  return s;
}

std::string cycle_text(const bbd::Cycle& cycle, int a) {
  std::string s;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) s += ' ';
    s += bbd::vertex_name(cycle[i], a);
  }
  return s;
}

int cmd_check(const std::string& path) {
  bbd::BipartiteDigraph d = load(path);
  const int a = d.half_order();
  std::cout << "a: " << a << "\n";
  std::cout << "arcs: " << d.arc_count() << "\n";
  for (bbd::VertexId v = 0; v < d.order(); ++v) {
    auto deg = d.degree(v);
    std::cout << "degree " << bbd::vertex_name(v, a) << ": out " << deg.out
              << " in " << deg.in << " total " << deg.total << "\n";
  }
  const bool sc = bbd::is_strongly_connected(d);
  auto report = bbd::check_condition_a(d);
  std::cout << "strongly_connected: " << (sc ? "yes" : "no") << "\n";
  std::cout << "condition_a: " << (report.holds ? "yes" : "no") << "\n";
  if (report.witness) {
    const auto& w = *report.witness;
    std::cout << "witness: " << bbd::vertex_name(w.u, a) << " "
              << bbd::vertex_name(w.v, a) << " sum " << w.degree_sum << " < "
              << 3 * a << " shared " << bbd::vertex_name(w.shared, a) << " ("
              << (w.kind == bbd::SharedKind::InNeighbour ? "in-neighbour"
                                                         : "out-neighbour")
              << ")\n";
  }
  return sc && report.holds ? kExitYes : kExitNo;
}

int cmd_hamilton(const std::string& path) {
  bbd::BipartiteDigraph d = load(path);
  auto result = bbd::find_hamiltonian(d);
  if (result.verdict == bbd::Verdict::Hamiltonian) {
    std::cout << cycle_text(*result.cycle, d.half_order()) << "\n";
    return kExitYes;
  }
  switch (result.certificate) {
    case bbd::CertificateKind::HallViolator:
      std::cout << "certificate: " << violator_text(*result.violator, d.half_order())
                << "\n";
      return kExitNo;
    case bbd::CertificateKind::ExhaustedSearch:
      std::cout << "certificate: exhausted-search\n";
      return kExitNo;
    case bbd::CertificateKind::NotStronglyConnected:
      std::cout << "certificate: not-strongly-connected\n";
      return kExitNo;
    case bbd::CertificateKind::UndecidedAtScale:
      std::cout << "certificate: undecided-at-scale\n";
      return kExitUndecided;
    case bbd::CertificateKind::None:
      break;
  }
  throw std::logic_error("missing certificate");
}

int cmd_factor(const std::string& path) {
  bbd::BipartiteDigraph d = load(path);
  auto result = bbd::cycle_factor(d);
  if (auto* violator = std::get_if<bbd::HallViolator>(&result)) {
    std::cout << "certificate: " << violator_text(*violator, d.half_order()) << "\n";
    return kExitNo;
  }
  const auto& factor = std::get<bbd::CycleFactor>(result);
  std::cout << "cycles:";
  for (const auto& cycle : factor.cycles)
    std::cout << " [" << cycle_text(cycle, d.half_order()) << "]";
  std::cout << "\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced bipartite digraph toolkit"};
  app.require_subcommand(1);

  std::string path;
  std::string out_path;
  int a = 0, l = 0, jobs = 1;
  std::uint64_t seed = 0, samples = 0;
  double density = 0.5;

  auto* check = app.add_subcommand("check",
                                   "degrees, strong connectivity, degree condition");
  check->add_option("file", path, "digraph file")->required();

  auto* hamilton =
      app.add_subcommand("hamilton", "find a Hamiltonian cycle or a certificate");
  hamilton->add_option("file", path, "digraph file")->required();

  auto* factor = app.add_subcommand("factor", "cycle factor or Hall violator");
  factor->add_option("file", path, "digraph file")->required();

  auto* extremal = app.add_subcommand("extremal", "write the extremal digraph D(a,l)");
  extremal->add_option("--a", a, "partite set size (>= 3)")->required();
  extremal->add_option("--l", l, "parameter l (1 <= l < a/2)")->required();
  extremal->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* random = app.add_subcommand("random", "write a random digraph");
  random->add_option("--a", a, "partite set size")->required();
  random->add_option("--density", density, "arc probability in [0,1]")->required();
  random->add_option("--seed", seed, "stream seed")->required();
  random->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive sweep (a = 2 or 3)");
  enumerate->add_option("--a", a, "partite set size")->required();
  enumerate->add_option("--jobs", jobs, "worker threads (affects wall time only)");

  auto* verify = app.add_subcommand("verify", "randomized sweep (4 <= a <= 12)");
  verify->add_option("--a", a, "partite set size")->required();
  verify->add_option("--samples", samples, "number of sampled digraphs")->required();
  verify->add_option("--seed", seed, "stream seed")->required();
  verify->add_option("--density", density, "arc probability in [0,1]")->required();
  verify->add_option("--jobs", jobs, "worker threads (affects wall time only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*check) return cmd_check(path);
    if (*hamilton) return cmd_hamilton(path);
    if (*factor) return cmd_factor(path);
    if (*extremal) {
      emit(bbd::to_file_string(bbd::gen_extremal({a, l})), out_path);
      return kExitYes;
    }
    if (*random) {
      // one file = sample 0 of the (seed, density) stream
      emit(bbd::to_file_string(bbd::sample_instance(a, seed, density, 0)), out_path);
      return kExitYes;
    }
    if (*enumerate) {
      auto report = bbd::enumerate_universe(a, jobs);
      std::cout << bbd::format_report(report);
      return report.counterexamples.empty() ? kExitYes : kExitNo;
    }
    if (*verify) {
      auto report = bbd::sample_universe(a, samples, seed, density, jobs);
      std::cout << bbd::format_report(report);
      return report.counterexamples.empty() ? kExitYes : kExitNo;
    }
  } catch (const bbd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
