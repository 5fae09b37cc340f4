#ifndef DEGEX_CONSTRUCT_HPP
#define DEGEX_CONSTRUCT_HPP

#include "degex/boundary_graph.hpp"
#include "degex/degree_sequence.hpp"
#include "degex/graph.hpp"
#include "degex/rooted_tree.hpp"

namespace degex {

// The greedy tree: degrees assigned in nonincreasing order to vertices in
// breadth-first order. Vertex labels follow construction order, so the
// identity ordering is a BFS-ordering of the result.
RootedTree greedy_tree(const DegreeSequence& pi);

// The greedy unicyclic graph: the cycle when the top degree is 2, otherwise
// the breadth-first graph whose first three vertices are pairwise adjacent.
Graph greedy_unicyclic(const DegreeSequence& pi);

enum class TreeClassKind { leaves, max_degree, independence, matching };

struct TreeClassSequence {
    DegreeSequence sequence;
    bool via_formula;  // false when the printed closed form failed validation
                       // and the brute-force argmax fallback was used
};

// Extremal tree degree sequence for the class of trees of order n with the
// given number of leaves / maximum degree / independence number / matching
// number. The max-degree closed form is validated and falls back to a
// brute-force argmax over tree sequences (n <= 10) when it is inconsistent.
TreeClassSequence extremal_class_sequence(TreeClassKind kind, int n, int param);

struct SloTreeResult {
    BoundaryGraph tree;
    bool direct;  // false when the result came from the enumeration fallback
};

// Tree with boundary whose interior degrees are assigned in nondecreasing
// order along breadth-first layers; leaves form the boundary. The direct
// construction is validated against is_slo_ordering and falls back to
// selecting the unique SLO* class among all realizations (n <= 10).
SloTreeResult slo_boundary_tree(const DegreeSequence& pi);

enum class UnicyclicBoundaryCase { slo_core, triangle_path_tree, cycle_tree };

struct BoundaryUnicyclicResult {
    BoundaryGraph graph;
    UnicyclicBoundaryCase kind;
};

// Boundary unicyclic extremal construction, split on the run of interior
// degree-2 entries (m = its length, interior degrees read in nondecreasing
// order): m <= 2 gives the SLO* graph with a pairwise-adjacent triple;
// m >= 3 glues a triangle through a path (next degree 3) or a cycle C_{m+1}
// (next degree >= 4) to the SLO* tree of the residual sequence.
BoundaryUnicyclicResult boundary_unicyclic(const DegreeSequence& pi);

// Triangle joined through a path to the center of a star with k leaves;
// n vertices total, exactly k of degree 1. Requires 1 <= k <= n-3; at
// k == n-3 the path degenerates and the star center lies on the triangle.
BoundaryGraph u_star_nk(int n, int k);

// Bicyclic graph with boundary whose first four vertices induce K4 minus
// the edge between the third and fourth vertex, interior degrees assigned
// in nondecreasing order. Requires >= 4 interior vertices, all of degree
// >= 3, and a bicyclic sequence.
BoundaryGraph bicyclic_dirichlet_extremal(const DegreeSequence& pi);

}  // namespace degex

#endif
