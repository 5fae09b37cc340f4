#ifndef DEGEX_ENUMERATE_HPP
#define DEGEX_ENUMERATE_HPP

#include <vector>

#include "degex/boundary_graph.hpp"
#include "degex/degree_sequence.hpp"
#include "degex/graph.hpp"

namespace degex {

// One representative per isomorphism class of trees with the given degree
// sequence, via Prufer multiset permutations with canonical-code dedup.
// Capped at n <= 11. Output order is deterministic (first occurrence in
// lexicographic Prufer order).
std::vector<Graph> trees_with_sequence(const DegreeSequence& pi);

// Number of labeled trees with the sequence: (n-2)! / prod (d_i - 1)!.
long long tree_labeled_count(const DegreeSequence& pi);

// All isomorphism classes of connected realizations of a unicyclic sequence
// (n edges). Capped at n <= 9.
std::vector<Graph> unicyclic_with_sequence(const DegreeSequence& pi);

// All isomorphism classes of connected realizations. Capped at n <= 8.
std::vector<Graph> connected_with_sequence(const DegreeSequence& pi);

// Number of labeled connected realizations, by the same backtracking.
long long connected_labeled_count(const DegreeSequence& pi);

struct BoundaryVariants {
    std::vector<BoundaryGraph> graphs;
    int filtered = 0;  // inputs rejected by the leaves-as-boundary invariants
};

// Wraps each graph with its leaves as boundary, filtering out graphs that
// violate the boundary invariants (no leaves, empty interior, adjacent leaves).
BoundaryVariants boundary_variants(const std::vector<Graph>& graphs);

}  // namespace degex

#endif
