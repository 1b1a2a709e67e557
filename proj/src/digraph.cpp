#include "bbd/digraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace bbd {

namespace {

int word_count(int n) { return (n + 63) / 64; }

inline void set_bit(std::uint64_t* row, VertexId v) {
  row[v >> 6] |= std::uint64_t{1} << (v & 63);
}

inline bool test_bit(const std::uint64_t* row, VertexId v) {
  return (row[v >> 6] >> (v & 63)) & 1u;
}

int popcount_row(const std::uint64_t* row, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(row[w]);
  return c;
}

// Calls fn(v) for every set bit of the row, ascending.
template <typename Fn>
void for_each_bit(std::span<const std::uint64_t> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = row[w];
    while (bits) {
      int b = std::countr_zero(bits);
      fn(static_cast<VertexId>(w * 64 + b));
      bits &= bits - 1;
    }
  }
}

std::vector<std::uint64_t> make_mask(int n, std::span<const VertexId> set) {
  std::vector<std::uint64_t> mask(word_count(n), 0);
  for (VertexId v : set) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    set_bit(mask.data(), v);
  }
  return mask;
}

}  // namespace

std::string vertex_name(VertexId v, int a) {
  if (v < 0 || v >= 2 * a) throw std::invalid_argument("vertex out of range");
  return v < a ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - a + 1);
}

std::optional<VertexId> parse_vertex_name(std::string_view name, int a) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) return std::nullopt;
  if (name[1] == '0') return std::nullopt;  // no leading zeros
  int idx = 0;
  auto [ptr, ec] =
      std::from_chars(name.data() + 1, name.data() + name.size(), idx);
  if (ec != std::errc{} || ptr != name.data() + name.size()) return std::nullopt;
  if (idx < 1 || idx > a) return std::nullopt;
  return name[0] == 'x' ? idx - 1 : a + idx - 1;
}

BipartiteDigraph::BipartiteDigraph(int a, std::span<const Arc> arcs)
    : a_(a), words_(word_count(2 * a)) {
  if (a < 1) throw std::invalid_argument("partite set size must be positive");
  const int n = 2 * a_;
  out_.assign(static_cast<std::size_t>(n) * words_, 0);
  in_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if ((u < a_) == (v < a_))
      throw std::invalid_argument("arc inside a partite set");
    auto* row = out_.data() + static_cast<std::size_t>(u) * words_;
    if (test_bit(row, v)) throw std::invalid_argument("duplicate arc");
    set_bit(row, v);
    set_bit(in_.data() + static_cast<std::size_t>(v) * words_, u);
    ++arc_count_;
  }
}

BipartiteDigraph::BipartiteDigraph(int a, std::initializer_list<Arc> arcs)
    : BipartiteDigraph(a, std::span<const Arc>(arcs.begin(), arcs.size())) {}

BipartiteDigraph BipartiteDigraph::complete(int a) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(2) * a * a);
  for (VertexId x = 0; x < a; ++x)
    for (VertexId y = a; y < 2 * a; ++y) {
      arcs.emplace_back(x, y);
      arcs.emplace_back(y, x);
    }
  return {a, arcs};
}

void BipartiteDigraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= order()) throw std::invalid_argument("vertex out of range");
}

bool BipartiteDigraph::has_arc(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return test_bit(out_.data() + static_cast<std::size_t>(u) * words_, v);
}

Degrees BipartiteDigraph::degree(VertexId v) const {
  check_vertex(v);
  Degrees deg;
  deg.out = popcount_row(out_.data() + static_cast<std::size_t>(v) * words_, words_);
  deg.in = popcount_row(in_.data() + static_cast<std::size_t>(v) * words_, words_);
  deg.total = deg.out + deg.in;
  return deg;
}

std::vector<VertexId> BipartiteDigraph::out_neighbours(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> result;
  for_each_bit(out_row(v), [&](VertexId w) { result.push_back(w); });
  return result;
}

std::vector<VertexId> BipartiteDigraph::in_neighbours(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> result;
  for_each_bit(in_row(v), [&](VertexId w) { result.push_back(w); });
  return result;
}

std::vector<Arc> BipartiteDigraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (VertexId u = 0; u < order(); ++u)
    for_each_bit(out_row(u), [&](VertexId v) { result.emplace_back(u, v); });
  return result;
}

bool BipartiteDigraph::operator==(const BipartiteDigraph& other) const {
  return a_ == other.a_ && out_ == other.out_;
}

std::vector<VertexId> neighbourhood(const BipartiteDigraph& d,
                                    std::span<const VertexId> set,
                                    Direction dir) {
  const int n = d.order();
  std::vector<std::uint64_t> acc(d.words_per_row(), 0);
  std::vector<std::uint64_t> mask = make_mask(n, set);  // validates range
  (void)mask;
  for (VertexId v : set) {
    auto row = dir == Direction::Out ? d.out_row(v) : d.in_row(v);
    for (int w = 0; w < d.words_per_row(); ++w) acc[w] |= row[w];
  }
  std::vector<VertexId> result;
  for_each_bit(acc, [&](VertexId v) { result.push_back(v); });
  return result;
}

int arcs_between(const BipartiteDigraph& d, std::span<const VertexId> s,
                 std::span<const VertexId> t) {
  const int n = d.order();
  auto mask_s = make_mask(n, s);
  auto mask_t = make_mask(n, t);
  int count = 0;
  for (VertexId u : s) {
    auto row = d.out_row(u);
    for (int w = 0; w < d.words_per_row(); ++w)
      count += std::popcount(row[w] & mask_t[w]);
  }
  for (VertexId u : t) {
    auto row = d.out_row(u);
    for (int w = 0; w < d.words_per_row(); ++w)
      count += std::popcount(row[w] & mask_s[w]);
  }
  return count;
}

bool is_strongly_connected(const BipartiteDigraph& d) {
  const int n = d.order();
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  stack.reserve(n);
  int next_index = 0;
  int components = 0;

  struct Frame {
    VertexId v;
    VertexId next;  // next neighbour candidate (scan position)
  };
  std::vector<Frame> call;
  call.reserve(n);

  auto next_out = [&](VertexId v, VertexId from) -> VertexId {
    auto row = d.out_row(v);
    for (VertexId w = from; w < n; ++w)
      if ((row[w >> 6] >> (w & 63)) & 1u) return w;
    return -1;
  };

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& frame = call.back();
      VertexId v = frame.v;
      VertexId w = next_out(v, frame.next);
      if (w != -1) {
        frame.next = w + 1;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          ++components;
          VertexId u;
          do {
            u = stack.back();
            stack.pop_back();
            on_stack[u] = false;
          } while (u != v);
        }
      }
    }
  }
  return components == 1;
}

ConditionAReport check_condition_a(const BipartiteDigraph& d) {
  const int n = d.order();
  const int required = 3 * d.half_order();
  std::vector<int> total_degree(n);
  for (VertexId v = 0; v < n; ++v) total_degree[v] = d.degree(v).total;

  std::optional<ConditionAWitness> best;
  auto consider = [&](VertexId u, VertexId v, VertexId shared, SharedKind kind) {
    const int sum = total_degree[u] + total_degree[v];
    if (sum >= required) return;
    auto rank = [](const ConditionAWitness& w) {
      return std::tuple(w.degree_sum, w.u, w.v, w.shared,
                        w.kind == SharedKind::InNeighbour ? 0 : 1);
    };
    ConditionAWitness cand{u, v, sum, shared, kind};
    if (!best || rank(cand) < rank(*best)) best = cand;
  };

  std::vector<VertexId> members;
  for (VertexId shared = 0; shared < n; ++shared) {
    // pairs inside N+({shared}) have `shared` as a common in-neighbour,
    // pairs inside N-({shared}) have it as a common out-neighbour
    members = d.out_neighbours(shared);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        consider(members[i], members[j], shared, SharedKind::InNeighbour);
    members = d.in_neighbours(shared);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        consider(members[i], members[j], shared, SharedKind::OutNeighbour);
  }
  return {!best.has_value(), best};
}

}  // namespace bbd
