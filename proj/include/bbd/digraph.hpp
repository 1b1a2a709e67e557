#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bbd {

/// Vertex index in [0, 2a). Indices 0..a-1 are the first partite set
/// (named x1..xa), indices a..2a-1 the second (named y1..ya).
using VertexId = int;

using Arc = std::pair<VertexId, VertexId>;

enum class Side { V1, V2 };
enum class Direction { Out, In };

inline Side side_of(VertexId v, int a) { return v < a ? Side::V1 : Side::V2; }

/// Canonical vertex name: "x3", "y1", ...
std::string vertex_name(VertexId v, int a);

/// Inverse of vertex_name; nullopt on malformed or out-of-range names.
std::optional<VertexId> parse_vertex_name(std::string_view name, int a);

struct Degrees {
  int out = 0;
  int in = 0;
  int total = 0;
};

/// Balanced bipartite digraph on partite sets of size a, no loops, no arcs
/// inside a partite set. Adjacency is stored as packed bit rows (one row of
/// 64-bit words per vertex, out- and in-orientation both kept). Immutable
/// after construction; all operations are pure reads, so instances can be
/// shared freely across threads.
class BipartiteDigraph {
 public:
  /// Builds from an explicit arc list. Throws std::invalid_argument on
  /// a < 1, out-of-range endpoints, loops, same-side arcs, or duplicates.
  BipartiteDigraph(int a, std::span<const Arc> arcs);
  BipartiteDigraph(int a, std::initializer_list<Arc> arcs);

  static BipartiteDigraph complete(int a);

  int half_order() const { return a_; }
  int order() const { return 2 * a_; }
  int arc_count() const { return arc_count_; }
  int words_per_row() const { return words_; }

  bool has_arc(VertexId u, VertexId v) const;

  Degrees degree(VertexId v) const;  // throws on out-of-range v

  std::vector<VertexId> out_neighbours(VertexId v) const;
  std::vector<VertexId> in_neighbours(VertexId v) const;

  /// All arcs sorted by (source, target).
  std::vector<Arc> arcs() const;

  std::span<const std::uint64_t> out_row(VertexId v) const {
    return {out_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  std::span<const std::uint64_t> in_row(VertexId v) const {
    return {in_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  bool operator==(const BipartiteDigraph& other) const;

 private:
  int a_ = 0;
  int words_ = 0;
  int arc_count_ = 0;
  std::vector<std::uint64_t> out_;  // 2a rows of `words_` words each
  std::vector<std::uint64_t> in_;

  void check_vertex(VertexId v) const;
};

/// N+(S) or N-(S): vertices dominated by (resp. dominating) members of S.
std::vector<VertexId> neighbourhood(const BipartiteDigraph& d,
                                    std::span<const VertexId> set,
                                    Direction dir);

/// |A[S,T]| + |A[T,S]|: arcs in both directions between S and T.
/// arcs_between({v}, V\{v}) equals d(v).
int arcs_between(const BipartiteDigraph& d, std::span<const VertexId> s,
                 std::span<const VertexId> t);

/// True iff the whole digraph is one strongly connected component
/// (Tarjan decomposition, component count == 1).
bool is_strongly_connected(const BipartiteDigraph& d);

enum class SharedKind { InNeighbour, OutNeighbour };

struct ConditionAWitness {
  VertexId u = -1;
  VertexId v = -1;
  int degree_sum = 0;
  VertexId shared = -1;
  SharedKind kind = SharedKind::InNeighbour;
};

struct ConditionAReport {
  bool holds = false;
  std::optional<ConditionAWitness> witness;
};

/// Degree-sum check: every pair of distinct vertices with a common in- or
/// out-neighbour must satisfy d(u) + d(v) >= 3a. Candidate pairs are
/// enumerated per shared vertex (pairs inside each N+({w}) and N-({w})),
/// O(sum of d^2). When the check fails, the witness is the violating tuple
/// minimizing (degree_sum, u, v, shared, kind) with in-neighbour before
/// out-neighbour, so reports are deterministic.
ConditionAReport check_condition_a(const BipartiteDigraph& d);

}  // namespace bbd
