#ifndef DEGEX_GRAPH_HPP
#define DEGEX_GRAPH_HPP

#include <utility>
#include <vector>

#include "degex/degree_sequence.hpp"

namespace degex {

// Simple undirected graph with vertex-indexed sorted adjacency lists.
// Graphs are built once and treated as immutable afterwards.
class Graph {
public:
    explicit Graph(int n);

    void add_edge(int u, int v);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    std::vector<int> degree_vector() const;     // per-vertex degrees
    DegreeSequence degree_sequence() const;     // sorted nonincreasing

    bool is_connected() const;
    bool is_tree() const;

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// BFS distances from root; -1 for unreachable vertices.
std::vector<int> bfs_heights(const Graph& g, int root);

// All-pairs shortest path lengths. Throws if some pair has no path,
// naming the pair.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

}  // namespace degex

#endif
