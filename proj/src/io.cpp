#include "bbd/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace bbd {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

bool parse_int(const std::string& s, int& value) {
  if (s.empty() || s.size() > 9 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return false;
  value = std::stoi(s);
  return true;
}

}  // namespace

BipartiteDigraph read_digraph(std::istream& in) {
  enum class Stage { Header, Size, Arcs };
  Stage stage = Stage::Header;
  int a = 0;
  std::vector<Arc> arcs;
  std::string line;
  int line_number = 0;
  std::vector<int> arc_lines;  // line number per arc, for duplicate reports

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;

    switch (stage) {
      case Stage::Header:
        if (toks.size() != 2 || toks[0] != "bbd" || toks[1] != "1")
          throw ParseError(line_number, "expected header \"bbd 1\"");
        stage = Stage::Size;
        break;
      case Stage::Size:
        if (toks.size() != 2 || toks[0] != "a" || !parse_int(toks[1], a) || a < 1)
          throw ParseError(line_number, "expected size line \"a <positive int>\"");
        stage = Stage::Arcs;
        break;
      case Stage::Arcs: {
        if (toks.size() != 3 || toks[0] != "arc")
          throw ParseError(line_number, "expected \"arc <name> <name>\"");
        auto u = parse_vertex_name(toks[1], a);
        if (!u) throw ParseError(line_number, "bad vertex name \"" + toks[1] + "\"");
        auto v = parse_vertex_name(toks[2], a);
        if (!v) throw ParseError(line_number, "bad vertex name \"" + toks[2] + "\"");
        if ((*u < a) == (*v < a))
          throw ParseError(line_number,
                           "arc endpoints must lie in opposite partite sets");
        if (std::find(arcs.begin(), arcs.end(), Arc{*u, *v}) != arcs.end())
          throw ParseError(line_number, "duplicate arc " + toks[1] + " " + toks[2]);
        arcs.emplace_back(*u, *v);
        arc_lines.push_back(line_number);
        break;
      }
    }
  }
  if (stage == Stage::Header) throw ParseError(line_number + 1, "missing header");
  if (stage == Stage::Size) throw ParseError(line_number + 1, "missing size line");
  return {a, arcs};
}

BipartiteDigraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_digraph(in);
}

void write_digraph(std::ostream& out, const BipartiteDigraph& d) {
  out << "bbd 1\n";
  out << "a " << d.half_order() << "\n";
  for (const auto& [u, v] : d.arcs())
    out << "arc " << vertex_name(u, d.half_order()) << ' '
        << vertex_name(v, d.half_order()) << "\n";
}

std::string to_file_string(const BipartiteDigraph& d) {
  std::ostringstream out;
  write_digraph(out, d);
  return out.str();
}

}  // namespace bbd
