#include "degex/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "degex/enumerate.hpp"
#include "degex/errors.hpp"
#include "degex/invariants.hpp"
#include "degex/orderings.hpp"

namespace degex {

namespace {

// Breadth-first degree assignment: the first `core_size` vertices are wired
// by `core_edges`; every vertex then receives children with consecutive
// labels until its target degree is met. Vertex labels equal construction
// order, so position 0 is the root of the result.
Graph bfs_assign(const std::vector<int>& degrees, int core_size,
                 const std::vector<std::pair<int, int>>& core_edges) {
    const int n = static_cast<int>(degrees.size());
    Graph g(n);
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : core_edges) {
        g.add_edge(a, b);
        ++used[static_cast<std::size_t>(a)];
        ++used[static_cast<std::size_t>(b)];
    }
    int next = core_size;
    for (int v = 0; v < n; ++v) {
        int missing = degrees[static_cast<std::size_t>(v)] - used[static_cast<std::size_t>(v)];
        if (missing < 0 || next + missing > n)
            throw std::runtime_error("breadth-first degree assignment failed");
        while (missing-- > 0) {
            g.add_edge(v, next);
            ++used[static_cast<std::size_t>(v)];
            ++used[static_cast<std::size_t>(next)];
            ++next;
        }
    }
    if (next != n)
        throw std::runtime_error("breadth-first degree assignment failed");
    return g;
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

// Copies `part` into `host`, mapping part vertex 0 onto `attach` and vertex
// v >= 1 onto next_free + v - 1.
void graft_at(Graph& host, const Graph& part, int attach, int next_free) {
    auto map = [&](int v) { return v == 0 ? attach : next_free + v - 1; };
    for (auto [a, b] : part.edges()) host.add_edge(map(a), map(b));
}

void check_realizes(const Graph& g, const DegreeSequence& pi, int expect_edges, const char* who) {
    if (g.edge_count() != expect_edges || !g.is_connected() || !(g.degree_sequence() == pi))
        throw std::runtime_error(std::string(who) + ": construction failed to realize the sequence");
}

std::vector<int> with_leaves(std::vector<int> interior, int leaves) {
    interior.insert(interior.end(), static_cast<std::size_t>(leaves), 1);
    return interior;
}

}  // namespace

RootedTree greedy_tree(const DegreeSequence& pi) {
    if (classify(pi) != SequenceClass::tree)
        throw std::invalid_argument("greedy_tree: not a tree degree sequence");
    return RootedTree(bfs_assign(pi.entries(), 1, {}), 0);
}

Graph greedy_unicyclic(const DegreeSequence& pi) {
    if (classify(pi) != SequenceClass::unicyclic)
        throw std::invalid_argument("greedy_unicyclic: not a unicyclic degree sequence");
    const int n = pi.size();
    if (pi[0] == 2) {
        Graph cycle(n);
        for (int v = 0; v + 1 < n; ++v) cycle.add_edge(v, v + 1);
        cycle.add_edge(0, n - 1);
        return cycle;
    }
    return bfs_assign(pi.entries(), 3, {{0, 1}, {0, 2}, {1, 2}});
}

namespace {

long long int_power(long long base, int exp) {
    long long value = 1;
    while (exp-- > 0) value *= base;
    return value;
}

// Closed form of the extremal sequence for trees with maximum degree delta;
// returns nullopt when the printed formula is not even well defined.
std::optional<std::vector<int>> max_degree_formula(int n, int delta) {
    const long long d = delta;
    // smallest e with delta*(delta-1)^e >= n(delta-2)+2, so p = e - 1
    long long need = static_cast<long long>(n) * (d - 2) + 2;
    int e = 0;
    while (d * int_power(d - 1, e) < need) ++e;
    int p = e - 1;
    if (p < 1) return std::nullopt;
    long long full = (d * int_power(d - 1, p) - 2) / (d - 2);
    long long rem = n - full;
    if (rem < 0) return std::nullopt;
    long long r = rem / (d - 1), q = rem % (d - 1);
    long long count = (d * int_power(d - 1, p - 1) - 2) / (d - 2) + r;
    if (count < 1 || count > n) return std::nullopt;
    std::vector<int> entries(static_cast<std::size_t>(count), delta);
    if (q >= 1) entries.push_back(static_cast<int>(q));
    if (static_cast<int>(entries.size()) > n) return std::nullopt;
    entries.insert(entries.end(), static_cast<std::size_t>(n) - entries.size(), 1);
    return entries;
}

}  // namespace

TreeClassSequence extremal_class_sequence(TreeClassKind kind, int n, int param) {
    switch (kind) {
        case TreeClassKind::leaves: {
            if (param < 2 || param > n - 1)
                throw std::invalid_argument("leaf count must satisfy 2 <= s <= n-1");
            std::vector<int> entries{param};
            entries.insert(entries.end(), static_cast<std::size_t>(n - 1 - param), 2);
            return {DegreeSequence(with_leaves(std::move(entries), param)), true};
        }
        case TreeClassKind::independence: {
            if (param < 1 || param > n - 1 || (param == 1 && n > 2))
                throw std::invalid_argument("independence number out of range");
            std::vector<int> entries{param};
            entries.insert(entries.end(), static_cast<std::size_t>(n - param - 1), 2);
            return {DegreeSequence(with_leaves(std::move(entries), param)), true};
        }
        case TreeClassKind::matching: {
            if (param < 1 || param > n / 2)
                throw std::invalid_argument("matching number must satisfy 1 <= beta <= n/2");
            std::vector<int> entries{n - param};
            entries.insert(entries.end(), static_cast<std::size_t>(param - 1), 2);
            return {DegreeSequence(with_leaves(std::move(entries), n - param)), true};
        }
        case TreeClassKind::max_degree: {
            if (param < 3 || param > n - 1)
                throw std::invalid_argument("maximum degree must satisfy 3 <= delta <= n-1");
            if (auto entries = max_degree_formula(n, param)) {
                DegreeSequence seq(std::move(*entries));
                if (seq[0] == param && classify(seq) == SequenceClass::tree)
                    return {std::move(seq), true};
            }
            if (n > 10)
                throw std::runtime_error(
                    "max-degree closed form failed validation; argmax fallback capped at n <= 10");
            std::optional<DegreeSequence> best;
            double best_value = 0.0;
            for (const auto& seq : enumerate_tree_sequences(n)) {
                if (seq[0] != param) continue;
                double value = spectral_radius(greedy_tree(seq).graph(), MatrixKind::adjacency).value;
                if (!best || value > best_value) {
                    best = seq;
                    best_value = value;
                }
            }
            if (!best)
                throw std::invalid_argument("no tree sequence with the requested maximum degree");
            return {std::move(*best), false};
        }
    }
    throw std::invalid_argument("unknown corollary kind");
}

SloTreeResult slo_boundary_tree(const DegreeSequence& pi) {
    if (classify(pi) != SequenceClass::tree)
        throw std::invalid_argument("slo_boundary_tree: not a tree degree sequence");
    if (pi[0] < 2)
        throw std::invalid_argument("slo_boundary_tree: sequence needs an entry >= 2");

    Graph g = bfs_assign(with_leaves(pi.interior_ascending(), pi.count_leaves()), 1, {});
    auto bg = BoundaryGraph::leaves_as_boundary(g);
    if (bg && is_slo_ordering(*bg, identity_order(pi.size()), 0))
        return {std::move(*bg), true};

    if (pi.size() > 10)
        throw capacity_error(
            "slo_boundary_tree: direct construction failed; enumeration fallback capped at n <= 10");
    std::vector<BoundaryGraph> admitting;
    for (const Graph& t : trees_with_sequence(pi)) {
        auto candidate = BoundaryGraph::leaves_as_boundary(t);
        if (candidate && has_slo_ordering(*candidate)) admitting.push_back(std::move(*candidate));
    }
    if (admitting.size() == 1) return {std::move(admitting.front()), false};
    throw std::runtime_error(admitting.empty()
                                 ? "slo_boundary_tree: no realization admits an SLO*-ordering"
                                 : "slo_boundary_tree: SLO*-ordered realization is not unique");
}

BoundaryUnicyclicResult boundary_unicyclic(const DegreeSequence& pi) {
    if (classify(pi) != SequenceClass::unicyclic)
        throw std::invalid_argument("boundary_unicyclic: not a unicyclic degree sequence");
    const int n = pi.size();
    const int leaves = pi.count_leaves();
    if (leaves == 0)
        throw std::invalid_argument("boundary_unicyclic: pure cycle sequences have no boundary");

    const std::vector<int> interior = pi.interior_ascending();
    const int k = static_cast<int>(interior.size());
    int m = 0;
    while (m < k && interior[static_cast<std::size_t>(m)] == 2) ++m;

    if (m <= 2) {
        Graph g = bfs_assign(with_leaves(interior, leaves), 3, {{0, 1}, {0, 2}, {1, 2}});
        auto bg = BoundaryGraph::leaves_as_boundary(g);
        if (!bg || !is_slo_ordering(*bg, identity_order(n), 0))
            throw std::runtime_error("boundary_unicyclic: triangle-core construction is not SLO*-ordered");
        return {std::move(*bg), UnicyclicBoundaryCase::slo_core};
    }

    Graph g(n);
    UnicyclicBoundaryCase kind;
    if (interior[static_cast<std::size_t>(m)] == 3) {
        kind = UnicyclicBoundaryCase::triangle_path_tree;
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        int prev = 2;
        if (m == k - 1) {
            // All remaining degree mass is the path; its far end is the leaf.
            for (int v = 3; v <= m + 1; ++v) {
                g.add_edge(prev, v);
                prev = v;
            }
        } else {
            for (int v = 3; v <= m; ++v) {
                g.add_edge(prev, v);
                prev = v;
            }
            g.add_edge(prev, m + 1);
            std::vector<int> tau{interior[static_cast<std::size_t>(m + 1)] - 1};
            tau.insert(tau.end(), interior.begin() + m + 2, interior.end());
            const Graph tree =
                slo_boundary_tree(DegreeSequence(with_leaves(std::move(tau), leaves))).tree.graph();
            graft_at(g, tree, m + 1, m + 2);
        }
    } else {
        kind = UnicyclicBoundaryCase::cycle_tree;
        for (int v = 0; v < m; ++v) g.add_edge(v, v + 1);
        g.add_edge(0, m);
        std::vector<int> tau{interior[static_cast<std::size_t>(m)] - 2};
        tau.insert(tau.end(), interior.begin() + m + 1, interior.end());
        const Graph tree =
            slo_boundary_tree(DegreeSequence(with_leaves(std::move(tau), leaves))).tree.graph();
        graft_at(g, tree, 0, m + 1);
    }
    check_realizes(g, pi, n, "boundary_unicyclic");
    auto bg = BoundaryGraph::leaves_as_boundary(g);
    if (!bg) throw std::runtime_error("boundary_unicyclic: boundary wrap failed");
    return {std::move(*bg), kind};
}

BoundaryGraph u_star_nk(int n, int k) {
    if (k < 1 || k > n - 3)
        throw std::invalid_argument("u_star_nk: requires 1 <= k <= n-3");
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    int center = 2;
    for (int v = 3; v < n - k; ++v) {
        g.add_edge(center, v);
        center = v;
    }
    for (int v = n - k; v < n; ++v) g.add_edge(center, v);
    auto bg = BoundaryGraph::leaves_as_boundary(g);
    if (!bg) throw std::runtime_error("u_star_nk: boundary wrap failed");
    return std::move(*bg);
}

BoundaryGraph bicyclic_dirichlet_extremal(const DegreeSequence& pi) {
    if (classify(pi) != SequenceClass::bicyclic)
        throw std::invalid_argument("bicyclic_dirichlet_extremal: not a bicyclic degree sequence");
    const std::vector<int> interior = pi.interior_ascending();
    if (interior.size() < 4)
        throw std::invalid_argument("bicyclic_dirichlet_extremal: needs at least 4 interior vertices");
    if (interior.front() < 3)
        throw std::invalid_argument("bicyclic_dirichlet_extremal: interior degrees must be >= 3");

    Graph g = bfs_assign(with_leaves(interior, pi.count_leaves()), 4,
                         {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    check_realizes(g, pi, pi.size() + 1, "bicyclic_dirichlet_extremal");
    auto bg = BoundaryGraph::leaves_as_boundary(g);
    if (!bg || !is_slo_ordering(*bg, identity_order(pi.size()), 0))
        throw std::runtime_error("bicyclic_dirichlet_extremal: construction is not SLO*-ordered");
    return std::move(*bg);
}

}  // namespace degex
