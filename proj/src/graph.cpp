#include "degex/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace degex {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n <= 0)
        throw std::invalid_argument("graph must have at least one vertex");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    if (has_edge(u, v))
        throw std::invalid_argument("parallel edges are not allowed");
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto& av = adj_[static_cast<std::size_t>(v)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(int u, int v) const {
    const auto& au = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<int> Graph::degree_vector() const {
    std::vector<int> degrees(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) degrees[static_cast<std::size_t>(v)] = degree(v);
    return degrees;
}

DegreeSequence Graph::degree_sequence() const {
    return DegreeSequence(degree_vector());
}

bool Graph::is_connected() const {
    const std::vector<int> heights = bfs_heights(*this, 0);
    return std::none_of(heights.begin(), heights.end(), [](int h) { return h < 0; });
}

bool Graph::is_tree() const {
    return edge_count() == n_ - 1 && is_connected();
}

std::vector<int> bfs_heights(const Graph& g, int root) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("bfs root out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> queue;
    dist[static_cast<std::size_t>(root)] = 0;
    queue.push(root);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        dist[static_cast<std::size_t>(v)] = bfs_heights(g, v);
        for (int w = 0; w < n; ++w) {
            if (dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] < 0)
                throw std::invalid_argument("graph is disconnected: no path between " +
                                            std::to_string(v) + " and " + std::to_string(w));
        }
    }
    return dist;
}

}  // namespace degex
