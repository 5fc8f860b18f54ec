#pragma once

#include <iosfwd>
#include <string>

#include "excol/coloring.hpp"
#include "excol/graph.hpp"

namespace excol {

// DIMACS .col reader: one "p edge n m" header, then "e u v" lines with
// 1-based endpoints. Comment lines ("c ...") are ignored. Duplicate and
// reversed edge lines collapse; self-loops and out-of-range endpoints are
// parse errors naming the offending line.
Graph load_dimacs(std::istream& in);
Graph load_dimacs_string(const std::string& text);
Graph load_dimacs_file(const std::string& path);

std::string emit_dimacs(const Graph& g);

// Lists file: one line per vertex, "v: c1 c2 ...", all ids 0-based.
// universe_size is the declared universe; pass -1 to infer max id + 1.
ListAssignment load_lists(std::istream& in, int vertex_count, int universe_size = -1);
ListAssignment load_lists_file(const std::string& path, int vertex_count, int universe_size = -1);
std::string emit_lists(const ListAssignment& lists);

}  // namespace excol
