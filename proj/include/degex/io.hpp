#ifndef DEGEX_IO_HPP
#define DEGEX_IO_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "degex/boundary_graph.hpp"
#include "degex/graph.hpp"

namespace degex {

// Edge-list format: first line "n", then one line "u v" per edge with
// 0-indexed endpoints and u < v. Boundary graphs append a final line
// "B: i j k ..." listing boundary vertex ids.
struct ParsedGraph {
    Graph graph;
    std::optional<std::vector<int>> boundary;
};

ParsedGraph read_edge_list(std::istream& in);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, const BoundaryGraph& bg);

}  // namespace degex

#endif
