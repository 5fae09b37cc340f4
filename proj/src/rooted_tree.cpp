#include "degex/rooted_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace degex {

RootedTree::RootedTree(Graph tree, int root) : graph_(std::move(tree)), root_(root) {
    if (!graph_.is_tree())
        throw std::invalid_argument("rooted tree: underlying graph is not a tree");
    if (root < 0 || root >= graph_.vertex_count())
        throw std::invalid_argument("rooted tree: root out of range");

    const std::size_t n = static_cast<std::size_t>(graph_.vertex_count());
    height_ = bfs_heights(graph_, root);
    parent_.assign(n, -1);
    children_.assign(n, {});
    for (int v = 0; v < graph_.vertex_count(); ++v) {
        for (int w : graph_.neighbors(v)) {
            if (height_[static_cast<std::size_t>(w)] == height_[static_cast<std::size_t>(v)] + 1) {
                parent_[static_cast<std::size_t>(w)] = v;
                children_[static_cast<std::size_t>(v)].push_back(w);
            }
        }
    }

    phi_.assign(n, 1);
    std::vector<int> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<int>(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return height_[static_cast<std::size_t>(a)] > height_[static_cast<std::size_t>(b)];
    });
    for (int v : order) {
        if (parent_[static_cast<std::size_t>(v)] >= 0)
            phi_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])] +=
                phi_[static_cast<std::size_t>(v)];
    }
}

std::vector<int> RootedTree::sorted_subtree_sizes() const {
    std::vector<int> sorted = phi_;
    std::sort(sorted.rbegin(), sorted.rend());
    return sorted;
}

std::vector<int> RootedTree::layer_sizes() const {
    int max_height = *std::max_element(height_.begin(), height_.end());
    std::vector<int> sizes(static_cast<std::size_t>(max_height + 1), 0);
    for (int h : height_) ++sizes[static_cast<std::size_t>(h)];
    return sizes;
}

}  // namespace degex
