#include "degex/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "degex/errors.hpp"

namespace degex {

namespace {

std::vector<int> tree_centers(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return {0};
    std::vector<int> degree = g.degree_vector();
    std::vector<int> layer;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[static_cast<std::size_t>(v)] = 1;
            --remaining;
            for (int w : g.neighbors(v)) {
                if (!removed[static_cast<std::size_t>(w)] &&
                    --degree[static_cast<std::size_t>(w)] == 1)
                    next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string ahu_code(const Graph& g, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : g.neighbors(v))
        if (w != parent) child_codes.push_back(ahu_code(g, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

// Branch-and-bound over degree-sorted relabelings, minimizing the
// column-major upper-triangle adjacency string.
class MinCodeSearch {
public:
    explicit MinCodeSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
        std::vector<int> degrees = g.degree_vector();
        target_ = degrees;
        std::sort(target_.rbegin(), target_.rend());
        used_.assign(static_cast<std::size_t>(n_), 0);
        perm_.assign(static_cast<std::size_t>(n_), -1);
    }

    std::string run() {
        extend(0);
        return best_;
    }

private:
    void extend(int pos) {
        if (pos == n_) {
            if (best_.empty() || cur_ < best_) best_ = cur_;
            return;
        }
        const int want = target_[static_cast<std::size_t>(pos)];
        for (int v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)] || g_.degree(v) != want) continue;
            std::string col(static_cast<std::size_t>(pos), '0');
            for (int q = 0; q < pos; ++q)
                if (g_.has_edge(perm_[static_cast<std::size_t>(q)], v))
                    col[static_cast<std::size_t>(q)] = '1';
            if (!best_.empty()) {
                // Prune only while cur_ still matches the incumbent prefix;
                // once strictly below, every completion is an improvement.
                int prefix_cmp = best_.compare(0, cur_.size(), cur_);
                if (prefix_cmp == 0 &&
                    col.compare(best_.substr(cur_.size(), col.size())) > 0)
                    continue;
            }
            used_[static_cast<std::size_t>(v)] = 1;
            perm_[static_cast<std::size_t>(pos)] = v;
            cur_ += col;
            extend(pos + 1);
            cur_.resize(cur_.size() - col.size());
            perm_[static_cast<std::size_t>(pos)] = -1;
            used_[static_cast<std::size_t>(v)] = 0;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> target_;
    std::vector<char> used_;
    std::vector<int> perm_;
    std::string cur_;
    std::string best_;
};

}  // namespace

std::string tree_canonical_code(const Graph& tree) {
    if (!tree.is_tree())
        throw std::invalid_argument("tree_canonical_code: input is not a tree");
    std::string best;
    for (int c : tree_centers(tree)) {
        std::string code = ahu_code(tree, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return "T" + std::to_string(tree.vertex_count()) + ":" + best;
}

std::string graph_canonical_code(const Graph& g) {
    if (g.vertex_count() > 10)
        throw capacity_error("graph_canonical_code: capped at 10 vertices");
    MinCodeSearch search(g);
    return "G" + std::to_string(g.vertex_count()) + ":" + search.run();
}

std::string canonical_code(const Graph& g) {
    return g.is_tree() ? tree_canonical_code(g) : graph_canonical_code(g);
}

}  // namespace degex
