#ifndef DEGEX_INVARIANTS_HPP
#define DEGEX_INVARIANTS_HPP

#include <vector>

#include "degex/boundary_graph.hpp"
#include "degex/graph.hpp"

namespace degex {

enum class MatrixKind { adjacency, laplacian, signless, normalized };

struct SpectralResult {
    double value = 0.0;
    bool converged = false;
    double residual = 0.0;  // ||M x - value x||_inf for the returned eigenpair
};

// Solver tolerance for eigenvalues; cross-graph decisions in the
// verification suites use the looser 1e-8.
inline constexpr double kEigenTol = 1e-10;

// Largest eigenvalue of the selected symmetric graph matrix.
SpectralResult spectral_radius(const Graph& g, MatrixKind kind);

// Sum of the absolute values of the adjacency eigenvalues. The eigenvalue
// sum and the sum of squares are checked against 0 and 2|E|.
double energy(const Graph& g);

// Smallest eigenvalue of the Laplacian restricted to the interior vertices
// (zero boundary condition); strictly positive for a connected graph with
// nonempty boundary.
double dirichlet_first_eigenvalue(const BoundaryGraph& bg);

// Sum of all pairwise shortest-path distances.
long long wiener(const Graph& g);

// Distance weight function for the generalized Wiener-type invariant.
class PsiFunction {
public:
    enum class Kind { identity, hyper, reciprocal, threshold, table };

    static PsiFunction identity();
    static PsiFunction hyper();        // x(x+1)/2
    static PsiFunction reciprocal();   // 1/x
    static PsiFunction threshold(int r);  // 1 if x <= r else 0
    static PsiFunction table(std::vector<double> values);  // values[x-1]

    double operator()(int distance) const;  // defined for distance >= 1
    Kind kind() const { return kind_; }
    int threshold_radius() const { return r_; }
    int table_size() const { return static_cast<int>(values_.size()); }

private:
    PsiFunction(Kind kind, int r, std::vector<double> values)
        : kind_(kind), r_(r), values_(std::move(values)) {}
    Kind kind_;
    int r_ = 0;
    std::vector<double> values_;
};

// Sum of psi(d(u,v)) over unordered vertex pairs. Identity psi recovers the
// Wiener index, reciprocal the Harary index, hyper the hyper-Wiener index,
// threshold(r) the pair count p_r.
double w_psi(const Graph& g, const PsiFunction& psi);

// Number of unordered pairs at distance <= r.
long long p_r_count(const Graph& g, int r);

// Sum over edges of the product of endpoint degrees.
long long second_zagreb(const Graph& g);

// m(G,k) for all k, m(G,0) = 1. Trees run the rooted DP; other graphs are
// counted by edge-subset recursion (capped at n <= 16 and |E| <= 24).
std::vector<long long> matching_profile(const Graph& g);
long long hosoya(const Graph& g);

// i(G,k) for all k, i(G,0) = 1. Same routing and caps as matching_profile.
std::vector<long long> independence_profile(const Graph& g);
long long merrifield_simmons(const Graph& g);

// Number of nonempty subtrees of a tree, by the rooted product formula.
long long subtree_count(const Graph& tree);

}  // namespace degex

#endif
