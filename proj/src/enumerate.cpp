#include "degex/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "degex/canonical.hpp"
#include "degex/errors.hpp"

namespace degex {

namespace {

Graph prufer_decode(const std::vector<int>& code, int n) {
    Graph g(n);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int v : code) ++degree[static_cast<std::size_t>(v)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    for (int v : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        g.add_edge(leaf, v);
        if (--degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    g.add_edge(a, b);
    return g;
}

// Degree-constrained edge backtracking: repeatedly complete the lowest
// vertex with unmet degree by choosing its neighbor set among later
// vertices, then filter connected leaves and dedup by canonical code.
class RealizationSearch {
public:
    RealizationSearch(const DegreeSequence& pi, bool count_only)
        : n_(pi.size()),
          residual_(pi.entries()),
          count_only_(count_only),
          adj_(static_cast<std::size_t>(pi.size()), 0u) {}

    void run() { extend(); }
    std::vector<Graph> take_classes() { return std::move(classes_); }
    long long labeled() const { return labeled_; }

private:
    bool connected() const {
        unsigned seen = 1u, frontier = 1u;
        while (frontier != 0u) {
            unsigned next = 0u;
            for (int v = 0; v < n_; ++v)
                if (frontier & (1u << v)) next |= adj_[static_cast<std::size_t>(v)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (1u << n_) - 1u;
    }

    void extend() {
        int u = -1;
        for (int v = 0; v < n_; ++v)
            if (residual_[static_cast<std::size_t>(v)] > 0) {
                u = v;
                break;
            }
        if (u < 0) {
            if (!connected()) return;
            ++labeled_;
            if (count_only_) return;
            Graph g(n_);
            for (auto [a, b] : edges_) g.add_edge(a, b);
            std::string code = canonical_code(g);
            if (seen_codes_.insert(std::move(code)).second) classes_.push_back(std::move(g));
            return;
        }
        std::vector<int> candidates;
        for (int v = u + 1; v < n_; ++v)
            if (residual_[static_cast<std::size_t>(v)] > 0 && !(adj_[static_cast<std::size_t>(u)] & (1u << v)))
                candidates.push_back(v);
        if (static_cast<int>(candidates.size()) < residual_[static_cast<std::size_t>(u)]) return;
        choose(u, candidates, 0, residual_[static_cast<std::size_t>(u)]);
    }

    void choose(int u, const std::vector<int>& candidates, std::size_t from, int need) {
        if (need == 0) {
            int saved = residual_[static_cast<std::size_t>(u)];
            residual_[static_cast<std::size_t>(u)] = 0;
            extend();
            residual_[static_cast<std::size_t>(u)] = saved;
            return;
        }
        if (candidates.size() - from < static_cast<std::size_t>(need)) return;
        int v = candidates[from];
        adj_[static_cast<std::size_t>(u)] |= 1u << v;
        adj_[static_cast<std::size_t>(v)] |= 1u << u;
        --residual_[static_cast<std::size_t>(v)];
        edges_.emplace_back(u, v);
        choose(u, candidates, from + 1, need - 1);
        edges_.pop_back();
        ++residual_[static_cast<std::size_t>(v)];
        adj_[static_cast<std::size_t>(u)] &= ~(1u << v);
        adj_[static_cast<std::size_t>(v)] &= ~(1u << u);
        choose(u, candidates, from + 1, need);
    }

    int n_;
    std::vector<int> residual_;
    bool count_only_;
    std::vector<unsigned> adj_;
    std::vector<std::pair<int, int>> edges_;
    long long labeled_ = 0;
    std::set<std::string> seen_codes_;
    std::vector<Graph> classes_;
};

}  // namespace

std::vector<Graph> trees_with_sequence(const DegreeSequence& pi) {
    if (classify(pi) != SequenceClass::tree)
        throw std::invalid_argument("trees_with_sequence: not a tree degree sequence");
    const int n = pi.size();
    if (n > 11)
        throw capacity_error("trees_with_sequence: capped at 11 vertices");
    if (n == 2) {
        Graph edge(2);
        edge.add_edge(0, 1);
        return {edge};
    }
    // Prufer multiset: vertex i appears d_i - 1 times.
    std::vector<int> code;
    for (int i = 0; i < n; ++i)
        code.insert(code.end(), static_cast<std::size_t>(pi[i] - 1), i);
    std::sort(code.begin(), code.end());
    std::set<std::string> seen;
    std::vector<Graph> classes;
    do {
        Graph t = prufer_decode(code, n);
        std::string key = tree_canonical_code(t);
        if (seen.insert(std::move(key)).second) classes.push_back(std::move(t));
    } while (std::next_permutation(code.begin(), code.end()));
    return classes;
}

long long tree_labeled_count(const DegreeSequence& pi) {
    if (classify(pi) != SequenceClass::tree)
        throw std::invalid_argument("tree_labeled_count: not a tree degree sequence");
    const int n = pi.size();
    if (n > 12)
        throw capacity_error("tree_labeled_count: capped at 12 vertices");
    long long numerator = 1, denominator = 1;
    for (int f = 2; f <= n - 2; ++f) numerator *= f;
    for (int i = 0; i < n; ++i)
        for (int f = 2; f <= pi[i] - 1; ++f) denominator *= f;
    return numerator / denominator;
}

std::vector<Graph> unicyclic_with_sequence(const DegreeSequence& pi) {
    if (classify(pi) != SequenceClass::unicyclic)
        throw std::invalid_argument("unicyclic_with_sequence: not a unicyclic degree sequence");
    if (pi.size() > 9)
        throw capacity_error("unicyclic_with_sequence: capped at 9 vertices");
    RealizationSearch search(pi, false);
    search.run();
    return search.take_classes();
}

std::vector<Graph> connected_with_sequence(const DegreeSequence& pi) {
    if (!has_connected_realization(pi))
        throw std::invalid_argument("connected_with_sequence: no connected realization exists");
    if (pi.size() > 8)
        throw capacity_error("connected_with_sequence: capped at 8 vertices");
    RealizationSearch search(pi, false);
    search.run();
    return search.take_classes();
}

long long connected_labeled_count(const DegreeSequence& pi) {
    if (!has_connected_realization(pi))
        throw std::invalid_argument("connected_labeled_count: no connected realization exists");
    if (pi.size() > 9)
        throw capacity_error("connected_labeled_count: capped at 9 vertices");
    RealizationSearch search(pi, true);
    search.run();
    return search.labeled();
}

BoundaryVariants boundary_variants(const std::vector<Graph>& graphs) {
    BoundaryVariants out;
    for (const Graph& g : graphs) {
        if (auto bg = BoundaryGraph::leaves_as_boundary(g))
            out.graphs.push_back(std::move(*bg));
        else
            ++out.filtered;
    }
    return out;
}

}  // namespace degex
