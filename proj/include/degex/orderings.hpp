#ifndef DEGEX_ORDERINGS_HPP
#define DEGEX_ORDERINGS_HPP

#include <vector>

#include "degex/boundary_graph.hpp"
#include "degex/graph.hpp"

namespace degex {

// Checks the three conditions of a breadth-first search ordering rooted at
// order[0] == root: heights nondecreasing, degrees nonincreasing, and the
// cross-edge consistency condition between consecutive layers.
bool is_bfs_ordering(const Graph& g, const std::vector<int>& order, int root);

// Whether some root and ordering satisfy is_bfs_ordering. Trees are decided
// by comparison with the greedy tree of their degree sequence; other graphs
// go through the backtracking search (capped at n <= 16).
bool has_bfs_ordering(const Graph& g);

// The generic backtracking decision, usable on trees as an independent
// route around the greedy-tree shortcut.
bool has_bfs_ordering_search(const Graph& g);

// Spiral-like ordering: heights nondecreasing, cross-edge condition,
// boundary vertices form a suffix, interior degrees nondecreasing.
// The root must be interior.
bool is_slo_ordering(const BoundaryGraph& bg, const std::vector<int>& order, int root);

// Whether some interior root and ordering pass is_slo_ordering (n <= 16).
bool has_slo_ordering(const BoundaryGraph& bg);

// Whether deleting all leaves of the tree leaves a (possibly empty) path.
bool is_caterpillar(const Graph& tree);

// The path of non-leaf vertices of a caterpillar, in path order
// (empty when every vertex is a leaf). Throws if the tree is not a caterpillar.
std::vector<int> caterpillar_spine(const Graph& tree);

// Whether, from some interior root, layer sizes are nondecreasing up to a
// radius r and every boundary vertex sits at height r or r+1.
bool is_ball_approximation(const BoundaryGraph& bg);

}  // namespace degex

#endif
