#pragma once

#include <iosfwd>
#include <string>

#include "edcslab/graph.hpp"

namespace edcslab {

// Edge-list text format:
//   n m
//   u v        (m lines, 0-based vertex ids)
//   b v1 v2 …  (optional final line listing the left-side vertices of a
//               bipartite instance)
// Writers emit edges in canonical sorted order, so write/read round-trips
// reproduce edge ids exactly.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace edcslab
