#ifndef DEGEX_CANONICAL_HPP
#define DEGEX_CANONICAL_HPP

#include <string>

#include "degex/graph.hpp"

namespace degex {

// AHU-style canonical code, minimized over the tree centers. Equal codes
// iff the trees are isomorphic. Throws on non-tree input.
std::string tree_canonical_code(const Graph& tree);

// Permutation-minimal adjacency bit string restricted to degree-sorted
// relabelings. Equal codes iff isomorphic. Capped at n <= 10.
std::string graph_canonical_code(const Graph& g);

// Canonical code dispatch: trees use the AHU code, everything else the
// permutation-minimal code. Codes from the two families never collide.
std::string canonical_code(const Graph& g);

}  // namespace degex

#endif
