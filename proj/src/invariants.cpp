#include "degex/invariants.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "degex/errors.hpp"
#include "degex/rooted_tree.hpp"

namespace degex {

namespace {

Eigen::MatrixXd build_matrix(const Graph& g, MatrixKind kind) {
    const int n = g.vertex_count();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (auto [a, b] : g.edges()) {
        double w = 1.0;
        switch (kind) {
            case MatrixKind::adjacency:
            case MatrixKind::signless:
                break;
            case MatrixKind::laplacian:
                w = -1.0;
                break;
            case MatrixKind::normalized:
                w = -1.0 / std::sqrt(static_cast<double>(g.degree(a)) * g.degree(b));
                break;
        }
        m(a, b) = w;
        m(b, a) = w;
    }
    if (kind != MatrixKind::adjacency) {
        for (int v = 0; v < n; ++v)
            m(v, v) = kind == MatrixKind::normalized ? 1.0 : static_cast<double>(g.degree(v));
    }
    return m;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_symmetric(const Eigen::MatrixXd& m,
                                                               bool with_vectors) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver did not converge");
    return solver;
}

std::vector<long long> tree_matching_profile(const Graph& g);
std::vector<long long> tree_independence_profile(const Graph& g);

void check_general_capacity(const Graph& g, const char* who) {
    if (g.vertex_count() > 16)
        throw capacity_error(std::string(who) + ": non-tree counting capped at 16 vertices");
    if (g.edge_count() > 24)
        throw capacity_error(std::string(who) + ": non-tree counting capped at 24 edges");
}

void trim(std::vector<long long>& profile) {
    while (profile.size() > 1 && profile.back() == 0) profile.pop_back();
}

// Enumerates every matching by choosing/skipping edges in order.
void matchings_rec(const std::vector<std::pair<int, int>>& edges, std::size_t idx,
                   unsigned covered, int size, std::vector<long long>& counts) {
    if (idx == edges.size()) {
        ++counts[static_cast<std::size_t>(size)];
        return;
    }
    matchings_rec(edges, idx + 1, covered, size, counts);
    auto [a, b] = edges[idx];
    unsigned mask = (1u << a) | (1u << b);
    if (!(covered & mask))
        matchings_rec(edges, idx + 1, covered | mask, size + 1, counts);
}

// Enumerates every independent set by choosing/skipping vertices in order.
void independent_rec(const Graph& g, int v, unsigned blocked, int size,
                     std::vector<long long>& counts) {
    if (v == g.vertex_count()) {
        ++counts[static_cast<std::size_t>(size)];
        return;
    }
    independent_rec(g, v + 1, blocked, size, counts);
    if (!(blocked & (1u << v))) {
        unsigned next = blocked | (1u << v);
        for (int w : g.neighbors(v)) next |= 1u << w;
        independent_rec(g, v + 1, next, size + 1, counts);
    }
}

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<long long> poly_add(std::vector<long long> a, const std::vector<long long>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<long long> tree_matching_profile(const Graph& g) {
    RootedTree tree(g, 0);
    const int n = g.vertex_count();
    // open_[v]: matchings of the subtree at v leaving v uncovered;
    // closed[v]: matchings covering v by an edge to one of its children.
    std::vector<std::vector<long long>> open_(static_cast<std::size_t>(n)),
        closed(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return tree.height(a) > tree.height(b); });
    for (int v : order) {
        std::vector<long long> f{1};
        for (int c : tree.children(v))
            f = poly_mul(f, poly_add(open_[static_cast<std::size_t>(c)],
                                     closed[static_cast<std::size_t>(c)]));
        std::vector<long long> t{0};
        for (int c0 : tree.children(v)) {
            std::vector<long long> term{0, 1};  // the edge v-c0
            term = poly_mul(term, open_[static_cast<std::size_t>(c0)]);
            for (int c : tree.children(v)) {
                if (c == c0) continue;
                term = poly_mul(term, poly_add(open_[static_cast<std::size_t>(c)],
                                               closed[static_cast<std::size_t>(c)]));
            }
            t = poly_add(std::move(t), term);
        }
        open_[static_cast<std::size_t>(v)] = std::move(f);
        closed[static_cast<std::size_t>(v)] = std::move(t);
    }
    auto profile = poly_add(open_[static_cast<std::size_t>(tree.root())],
                            closed[static_cast<std::size_t>(tree.root())]);
    trim(profile);
    return profile;
}

std::vector<long long> tree_independence_profile(const Graph& g) {
    RootedTree tree(g, 0);
    const int n = g.vertex_count();
    std::vector<std::vector<long long>> out(static_cast<std::size_t>(n)),
        in(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return tree.height(a) > tree.height(b); });
    for (int v : order) {
        std::vector<long long> excl{1}, incl{0, 1};
        for (int c : tree.children(v)) {
            excl = poly_mul(excl, poly_add(out[static_cast<std::size_t>(c)],
                                           in[static_cast<std::size_t>(c)]));
            incl = poly_mul(incl, out[static_cast<std::size_t>(c)]);
        }
        out[static_cast<std::size_t>(v)] = std::move(excl);
        in[static_cast<std::size_t>(v)] = std::move(incl);
    }
    auto profile = poly_add(out[static_cast<std::size_t>(tree.root())],
                            in[static_cast<std::size_t>(tree.root())]);
    trim(profile);
    return profile;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, MatrixKind kind) {
    if (!g.is_connected())
        throw std::invalid_argument("spectral_radius: graph must be connected");
    const Eigen::MatrixXd m = build_matrix(g, kind);
    auto solver = solve_symmetric(m, true);
    const int n = g.vertex_count();
    const double value = solver.eigenvalues()(n - 1);
    const Eigen::VectorXd vec = solver.eigenvectors().col(n - 1);
    const double residual = (m * vec - value * vec).cwiseAbs().maxCoeff();
    return {value, residual <= kEigenTol, residual};
}

double energy(const Graph& g) {
    const auto solver = solve_symmetric(build_matrix(g, MatrixKind::adjacency), false);
    const Eigen::VectorXd ev = solver.eigenvalues();
    if (std::abs(ev.sum()) > 1e-8)
        throw std::runtime_error("energy: eigenvalue sum check failed");
    if (std::abs(ev.squaredNorm() - 2.0 * g.edge_count()) > 1e-8)
        throw std::runtime_error("energy: eigenvalue square-sum check failed");
    return ev.cwiseAbs().sum();
}

double dirichlet_first_eigenvalue(const BoundaryGraph& bg) {
    const Graph& g = bg.graph();
    if (!g.is_connected())
        throw std::invalid_argument("dirichlet_first_eigenvalue: graph must be connected");
    const auto& interior = bg.interior();
    if (interior.empty())
        throw std::invalid_argument("dirichlet_first_eigenvalue: interior must be nonempty");
    const int k = static_cast<int>(interior.size());
    Eigen::MatrixXd m(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            int u = interior[static_cast<std::size_t>(i)], v = interior[static_cast<std::size_t>(j)];
            m(i, j) = i == j ? static_cast<double>(g.degree(u)) : (g.has_edge(u, v) ? -1.0 : 0.0);
        }
    }
    return solve_symmetric(m, false).eigenvalues()(0);
}

long long wiener(const Graph& g) {
    const auto dist = distance_matrix(g);
    long long total = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            total += dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    return total;
}

PsiFunction PsiFunction::identity() { return {Kind::identity, 0, {}}; }
PsiFunction PsiFunction::hyper() { return {Kind::hyper, 0, {}}; }
PsiFunction PsiFunction::reciprocal() { return {Kind::reciprocal, 0, {}}; }

PsiFunction PsiFunction::threshold(int r) {
    if (r < 1) throw std::invalid_argument("threshold radius must be >= 1");
    return {Kind::threshold, r, {}};
}

PsiFunction PsiFunction::table(std::vector<double> values) {
    for (double v : values)
        if (v < 0) throw std::invalid_argument("psi table values must be nonnegative");
    return {Kind::table, 0, std::move(values)};
}

double PsiFunction::operator()(int distance) const {
    switch (kind_) {
        case Kind::identity: return distance;
        case Kind::hyper: return 0.5 * distance * (distance + 1);
        case Kind::reciprocal: return 1.0 / distance;
        case Kind::threshold: return distance <= r_ ? 1.0 : 0.0;
        case Kind::table:
            if (distance > static_cast<int>(values_.size()))
                throw std::invalid_argument("psi table shorter than a realized distance");
            return values_[static_cast<std::size_t>(distance - 1)];
    }
    throw std::logic_error("unreachable psi kind");
}

double w_psi(const Graph& g, const PsiFunction& psi) {
    const auto dist = distance_matrix(g);
    double total = 0.0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            total += psi(dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
    return total;
}

long long p_r_count(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("p_r_count: radius must be >= 1");
    const auto dist = distance_matrix(g);
    long long count = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <= r) ++count;
    return count;
}

long long second_zagreb(const Graph& g) {
    long long total = 0;
    for (auto [a, b] : g.edges())
        total += static_cast<long long>(g.degree(a)) * g.degree(b);
    return total;
}

std::vector<long long> matching_profile(const Graph& g) {
    if (g.is_tree()) return tree_matching_profile(g);
    check_general_capacity(g, "matching_profile");
    std::vector<long long> counts(static_cast<std::size_t>(g.vertex_count() / 2 + 1), 0);
    matchings_rec(g.edges(), 0, 0u, 0, counts);
    trim(counts);
    return counts;
}

long long hosoya(const Graph& g) {
    long long total = 0;
    for (long long c : matching_profile(g)) total += c;
    return total;
}

std::vector<long long> independence_profile(const Graph& g) {
    if (g.is_tree()) return tree_independence_profile(g);
    check_general_capacity(g, "independence_profile");
    std::vector<long long> counts(static_cast<std::size_t>(g.vertex_count() + 1), 0);
    independent_rec(g, 0, 0u, 0, counts);
    trim(counts);
    return counts;
}

long long merrifield_simmons(const Graph& g) {
    long long total = 0;
    for (long long c : independence_profile(g)) total += c;
    return total;
}

long long subtree_count(const Graph& tree) {
    if (!tree.is_tree())
        throw std::invalid_argument("subtree_count: input is not a tree");
    RootedTree rooted(tree, 0);
    const int n = tree.vertex_count();
    std::vector<long long> f(static_cast<std::size_t>(n), 1);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return rooted.height(a) > rooted.height(b); });
    long long total = 0;
    for (int v : order) {
        for (int c : rooted.children(v)) f[static_cast<std::size_t>(v)] *= 1 + f[static_cast<std::size_t>(c)];
        total += f[static_cast<std::size_t>(v)];
    }
    return total;
}

}  // namespace degex
