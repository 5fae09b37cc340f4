#include "doctest.h"

#include <stdexcept>

#include <cmath>

#include "degex/construct.hpp"
#include "degex/enumerate.hpp"
#include "degex/invariants.hpp"
#include "oracle.hpp"

using namespace degex;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, n - 1);
    return g;
}

constexpr double kPi = 3.14159265358979323846;

long long fib(int n) {
    long long a = 0, b = 1;
    while (n-- > 0) {
        long long next = a + b;
        a = b;
        b = next;
    }
    return a;
}

}  // namespace

TEST_CASE("spectral radius closed forms") {
    CHECK(spectral_radius(star(4), MatrixKind::adjacency).value == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(spectral_radius(path(4), MatrixKind::adjacency).value ==
          doctest::Approx(2 * std::cos(kPi / 5)).epsilon(1e-10));
    for (int n = 3; n <= 8; ++n)
        CHECK(spectral_radius(star(n - 1), MatrixKind::laplacian).value ==
              doctest::Approx(n).epsilon(1e-10));
    const auto r = spectral_radius(path(6), MatrixKind::adjacency);
    CHECK(r.converged);
    CHECK(r.residual <= kEigenTol);

    Graph split(3);
    split.add_edge(0, 1);
    CHECK_THROWS_AS(spectral_radius(split, MatrixKind::adjacency), std::invalid_argument);
}

TEST_CASE("spectral radius bounds on enumerated graphs") {
    std::vector<Graph> graphs;
    for (const auto& seq : enumerate_tree_sequences(7))
        for (auto& t : trees_with_sequence(seq)) graphs.push_back(std::move(t));
    for (auto& u : unicyclic_with_sequence(DegreeSequence::parse("3 3 2 2 2 1 1")))
        graphs.push_back(std::move(u));
    for (const Graph& g : graphs) {
        int max_deg = 0;
        for (int v = 0; v < g.vertex_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
        const double rho = spectral_radius(g, MatrixKind::adjacency).value;
        CHECK(rho >= std::sqrt(static_cast<double>(max_deg)) - 1e-9);
        CHECK(rho >= 2.0 * g.edge_count() / g.vertex_count() - 1e-9);
        CHECK(rho <= max_deg + 1e-9);
    }
}

TEST_CASE("normalized Laplacian spectral radius lies in [1, 2]") {
    CHECK(spectral_radius(path(2), MatrixKind::normalized).value == doctest::Approx(2.0));
    CHECK(spectral_radius(cycle(4), MatrixKind::normalized).value == doctest::Approx(2.0));
    const double mu = spectral_radius(star(3), MatrixKind::normalized).value;
    CHECK(mu == doctest::Approx(2.0));
    CHECK(spectral_radius(cycle(5), MatrixKind::normalized).value < 2.0);
}

TEST_CASE("signless Laplacian equals Laplacian spectral radius on trees") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& seq : enumerate_tree_sequences(n))
            for (const auto& t : trees_with_sequence(seq))
                CHECK(spectral_radius(t, MatrixKind::signless).value ==
                      doctest::Approx(spectral_radius(t, MatrixKind::laplacian).value)
                          .epsilon(1e-9));
}

TEST_CASE("energy closed forms") {
    CHECK(energy(path(2)) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(energy(star(3)) == doctest::Approx(2 * std::sqrt(3.0)).epsilon(1e-10));
    CHECK(energy(path(4)) == doctest::Approx(2 * std::sqrt(5.0)).epsilon(1e-10));
}

TEST_CASE("Dirichlet eigenvalues") {
    CHECK(dirichlet_first_eigenvalue(*BoundaryGraph::leaves_as_boundary(path(3))) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(dirichlet_first_eigenvalue(*BoundaryGraph::leaves_as_boundary(star(4))) ==
          doctest::Approx(4.0).epsilon(1e-10));
    CHECK(dirichlet_first_eigenvalue(*BoundaryGraph::leaves_as_boundary(path(5))) ==
          doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-10));
    // Positive on every wrapped tree at n = 7.
    for (const auto& seq : enumerate_tree_sequences(7))
        for (const auto& t : trees_with_sequence(seq))
            CHECK(dirichlet_first_eigenvalue(*BoundaryGraph::leaves_as_boundary(t)) > 0.0);
}

TEST_CASE("wiener index") {
    CHECK(wiener(path(4)) == 10);
    CHECK(wiener(star(3)) == 9);
    for (int n = 2; n <= 10; ++n)
        CHECK(wiener(path(n)) == static_cast<long long>(n) * (n * n - 1) / 6);

    const DegreeSequence pi = DegreeSequence::parse("3 2 2 1 1 1");
    const auto classes = trees_with_sequence(pi);
    REQUIRE(classes.size() == 2);
    long long greedy_w = wiener(greedy_tree(pi).graph());
    CHECK(greedy_w == 31);
    for (const auto& t : classes) {
        CHECK(wiener(t) == oracle::wiener(t));
        if (wiener(t) != 31) CHECK(wiener(t) == 32);
    }
}

TEST_CASE("generalized distance invariants") {
    CHECK(w_psi(path(3), PsiFunction::reciprocal()) == doctest::Approx(2.5));
    CHECK(w_psi(path(4), PsiFunction::hyper()) == doctest::Approx(15.0));
    CHECK(w_psi(path(4), PsiFunction::table({1.0, 3.0, 6.0})) == doctest::Approx(15.0));
    CHECK_THROWS_AS(w_psi(path(4), PsiFunction::table({1.0, 3.0})), std::invalid_argument);
    CHECK_THROWS_AS(PsiFunction::threshold(0), std::invalid_argument);

    for (const auto& seq : enumerate_tree_sequences(7)) {
        for (const auto& t : trees_with_sequence(seq)) {
            CHECK(w_psi(t, PsiFunction::identity()) == doctest::Approx(wiener(t)));
            for (int r = 1; r <= 6; ++r)
                CHECK(w_psi(t, PsiFunction::threshold(r)) == doctest::Approx(p_r_count(t, r)));
        }
    }
}

TEST_CASE("distance-weight decomposition through the pair counts") {
    // W_psi(T) = sum_k (psi(k+1)-psi(k)) (n(n-1)/2 - p_k(T)) with psi(0) = 0.
    for (const auto& seq : enumerate_tree_sequences(8)) {
        for (const auto& t : trees_with_sequence(seq)) {
            const int n = t.vertex_count();
            for (const auto& psi : {PsiFunction::identity(), PsiFunction::hyper()}) {
                double total = 0.0;
                for (int k = 0; k < n; ++k) {
                    double delta = psi(k + 1) - (k == 0 ? 0.0 : psi(k));
                    long long pk = k == 0 ? 0 : p_r_count(t, k);
                    total += delta * (static_cast<double>(n) * (n - 1) / 2 - pk);
                }
                CHECK(total == doctest::Approx(w_psi(t, psi)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("pair counts") {
    CHECK(p_r_count(path(4), 1) == 3);
    CHECK(p_r_count(path(4), 3) == 6);
    const auto fig = greedy_tree(DegreeSequence::parse("4 4 3 3 3 3 2 1 1 1 1 1 1 1 1 1 1"));
    CHECK(p_r_count(fig.graph(), 1) == 16);
    long long prev = 0;
    for (int r = 1; r <= 16; ++r) {
        long long cur = p_r_count(fig.graph(), r);
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK(p_r_count(fig.graph(), 16) == 17 * 16 / 2);
}

TEST_CASE("second Zagreb index") {
    CHECK(second_zagreb(path(4)) == 8);
    CHECK(second_zagreb(star(3)) == 9);
    CHECK(second_zagreb(cycle(4)) == 16);
}

TEST_CASE("matching counts") {
    CHECK(matching_profile(path(4)) == std::vector<long long>{1, 3, 1});
    CHECK(hosoya(path(4)) == 5);
    CHECK(matching_profile(star(3)) == std::vector<long long>{1, 3});
    CHECK(hosoya(star(3)) == 4);
    CHECK(hosoya(cycle(5)) == 11);
    CHECK(matching_profile(cycle(5)) == oracle::matching_profile(cycle(5)));
    for (int n = 2; n <= 10; ++n) CHECK(hosoya(path(n)) == fib(n + 1));
}

TEST_CASE("independent set counts") {
    CHECK(merrifield_simmons(path(4)) == 8);
    CHECK(merrifield_simmons(star(3)) == 9);
    CHECK(merrifield_simmons(cycle(5)) == 11);
    CHECK(independence_profile(cycle(5)) == oracle::independence_profile(cycle(5)));
    for (int n = 2; n <= 10; ++n) CHECK(merrifield_simmons(path(n)) == fib(n + 2));
}

TEST_CASE("subtree counts") {
    CHECK(subtree_count(path(3)) == 6);
    CHECK(subtree_count(star(3)) == 11);
    CHECK(subtree_count(path(4)) == 10);
    CHECK_THROWS_AS(subtree_count(cycle(4)), std::invalid_argument);
}

TEST_CASE("counting DPs match the subset oracles on all trees n <= 9") {
    for (int n = 2; n <= 9; ++n) {
        for (const auto& seq : enumerate_tree_sequences(n)) {
            for (const auto& t : trees_with_sequence(seq)) {
                CHECK(matching_profile(t) == oracle::matching_profile(t));
                CHECK(independence_profile(t) == oracle::independence_profile(t));
                CHECK(subtree_count(t) == oracle::subtree_count(t));
            }
        }
    }
}
