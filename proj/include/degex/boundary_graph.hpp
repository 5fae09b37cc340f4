#ifndef DEGEX_BOUNDARY_GRAPH_HPP
#define DEGEX_BOUNDARY_GRAPH_HPP

#include <optional>
#include <vector>

#include "degex/graph.hpp"

namespace degex {

// Graph partitioned into interior and boundary vertices for Dirichlet
// eigenproblems. Every boundary vertex has degree exactly 1 and its unique
// neighbor is interior; the interior is nonempty. The standing convention
// (interior degrees >= 2) is enforced by leaves_as_boundary, which is the
// wrapping used by enumeration and the constructions.
class BoundaryGraph {
public:
    BoundaryGraph(Graph g, std::vector<int> boundary);

    // Wraps a graph with its degree-1 vertices as boundary. Returns nullopt
    // when the result would be degenerate: no leaf at all, empty interior,
    // or a leaf adjacent to another leaf.
    static std::optional<BoundaryGraph> leaves_as_boundary(const Graph& g);

    const Graph& graph() const { return graph_; }
    const std::vector<int>& boundary() const { return boundary_; }  // sorted
    const std::vector<int>& interior() const { return interior_; }  // sorted
    bool is_boundary(int v) const { return is_boundary_[static_cast<std::size_t>(v)]; }

private:
    Graph graph_;
    std::vector<int> boundary_;
    std::vector<int> interior_;
    std::vector<char> is_boundary_;
};

}  // namespace degex

#endif
