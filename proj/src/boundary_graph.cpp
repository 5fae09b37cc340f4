#include "degex/boundary_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace degex {

BoundaryGraph::BoundaryGraph(Graph g, std::vector<int> boundary)
    : graph_(std::move(g)), boundary_(std::move(boundary)) {
    const int n = graph_.vertex_count();
    std::sort(boundary_.begin(), boundary_.end());
    if (std::adjacent_find(boundary_.begin(), boundary_.end()) != boundary_.end())
        throw std::invalid_argument("boundary graph: duplicate boundary vertex");

    is_boundary_.assign(static_cast<std::size_t>(n), 0);
    for (int v : boundary_) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("boundary graph: boundary vertex out of range");
        is_boundary_[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!is_boundary_[static_cast<std::size_t>(v)]) interior_.push_back(v);
    if (interior_.empty())
        throw std::invalid_argument("boundary graph: interior must be nonempty");

    for (int v : boundary_) {
        if (graph_.degree(v) != 1)
            throw std::invalid_argument("boundary graph: boundary vertex must have degree 1");
        if (is_boundary_[static_cast<std::size_t>(graph_.neighbors(v).front())])
            throw std::invalid_argument("boundary graph: boundary vertex adjacent to boundary vertex");
    }
}

std::optional<BoundaryGraph> BoundaryGraph::leaves_as_boundary(const Graph& g) {
    std::vector<int> leaves;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) leaves.push_back(v);
    if (leaves.empty() || static_cast<int>(leaves.size()) == g.vertex_count())
        return std::nullopt;
    for (int v : leaves)
        if (g.degree(g.neighbors(v).front()) == 1) return std::nullopt;
    return BoundaryGraph(g, std::move(leaves));
}

}  // namespace degex
