#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bbd/digraph.hpp"

namespace bbd {

/// Parse failure with the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

/// Digraph file grammar (7-bit text, newline-terminated lines):
///   bbd 1            header, exact
///   a <int>          partite set size, >= 1
///   arc <name> <name>   zero or more; names x1..xa / y1..ya, opposite sides
/// Lines starting with '#' and blank lines are ignored anywhere.
/// Duplicate arc lines are rejected.
BipartiteDigraph read_digraph(std::istream& in);
BipartiteDigraph read_digraph_file(const std::string& path);

/// Canonical form: header, size line, arcs sorted by (source, target).
/// Parsing a canonical file and writing it back is byte-identical.
void write_digraph(std::ostream& out, const BipartiteDigraph& d);
std::string to_file_string(const BipartiteDigraph& d);

}  // namespace bbd
