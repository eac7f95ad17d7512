#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mimic/graph.hpp"

namespace mimic {

// Line-oriented text graph format:
//   c <comment>
//   p <n> <m> <k>
//   e <u> <v> <w>     1-based vertex ids, integer weight w >= 1
//   t <v>
// Writers emit edges sorted by (u, v, id) and terminals in terminal order.
struct GraphInput {
    int n = 0;
    std::vector<WeightedEdge> edges;      // 1-based endpoints as parsed
    std::vector<VertexId> terminals;      // in file order
    std::vector<VertexId> vertex_list() const;
};

GraphInput parse_graph_text(std::istream& in);
GraphInput read_graph_file(const std::string& path);

std::string format_graph_text(const Multigraph& g, const TerminalSet& t);

// Renumbers vertices to 1..n (ascending id order) and writes via a temp file
// followed by an atomic rename.
void write_graph_file(const std::string& path, const Multigraph& g, const TerminalSet& t);

}  // namespace mimic
