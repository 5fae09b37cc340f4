#ifndef DEGEX_ROOTED_TREE_HPP
#define DEGEX_ROOTED_TREE_HPP

#include <vector>

#include "degex/graph.hpp"

namespace degex {

// Tree with a designated root, breadth-first layering and the subtree-size
// vector phi (phi[v] = number of vertices in the subtree hanging from v).
class RootedTree {
public:
    RootedTree(Graph tree, int root);

    const Graph& graph() const { return graph_; }
    int root() const { return root_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
    int height(int v) const { return height_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& subtree_sizes() const { return phi_; }
    std::vector<int> sorted_subtree_sizes() const;  // phi sorted nonincreasing

    std::vector<int> layer_sizes() const;

private:
    Graph graph_;
    int root_;
    std::vector<int> parent_;
    std::vector<int> height_;
    std::vector<std::vector<int>> children_;
    std::vector<int> phi_;
};

}  // namespace degex

#endif
