#include "degex/orderings.hpp"

#include <algorithm>
#include <stdexcept>

#include "degex/canonical.hpp"
#include "degex/construct.hpp"
#include "degex/errors.hpp"

namespace degex {

namespace {

constexpr int kSearchCap = 16;

std::vector<int> inverse_permutation(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("ordering must list every vertex exactly once");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] >= 0)
            throw std::invalid_argument("ordering must list every vertex exactly once");
        pos[static_cast<std::size_t>(v)] = i;
    }
    return pos;
}

std::vector<int> connected_heights(const Graph& g, int root, const char* who) {
    std::vector<int> h = bfs_heights(g, root);
    for (int d : h)
        if (d < 0) throw std::invalid_argument(std::string(who) + ": graph must be connected");
    return h;
}

// Edges spanning consecutive layers, oriented (lower, higher).
std::vector<std::pair<int, int>> cross_edges(const Graph& g, const std::vector<int>& h) {
    std::vector<std::pair<int, int>> cross;
    for (auto [a, b] : g.edges()) {
        if (h[static_cast<std::size_t>(a)] == h[static_cast<std::size_t>(b)]) continue;
        if (h[static_cast<std::size_t>(a)] > h[static_cast<std::size_t>(b)]) std::swap(a, b);
        cross.emplace_back(a, b);
    }
    return cross;
}

// For edges uv, xy with h(u) = h(x) = h(v)-1 = h(y)-1, uy and xv non-edges:
// u before x forces v before y.
bool cross_edge_condition(const Graph& g, const std::vector<int>& h, const std::vector<int>& pos) {
    const auto cross = cross_edges(g, h);
    for (std::size_t i = 0; i < cross.size(); ++i) {
        for (std::size_t j = 0; j < cross.size(); ++j) {
            if (i == j) continue;
            const auto [u, v] = cross[i];
            const auto [x, y] = cross[j];
            if (h[static_cast<std::size_t>(u)] != h[static_cast<std::size_t>(x)]) continue;
            if (g.has_edge(u, y) || g.has_edge(x, v)) continue;
            if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(x)] &&
                pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(y)])
                return false;
        }
    }
    return true;
}

// Vertices with identical neighborhoods (ignoring a mutual edge) are
// interchangeable by an automorphism; searches fix their relative order.
std::vector<std::vector<char>> twin_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> twin(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
    auto stripped = [&](int a, int b) {
        std::vector<int> nb = g.neighbors(a);
        nb.erase(std::remove(nb.begin(), nb.end(), b), nb.end());
        return nb;
    };
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.degree(u) != g.degree(v)) continue;
            if (stripped(u, v) == stripped(v, u)) {
                twin[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
                twin[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
            }
        }
    }
    return twin;
}

class BfsOrderSearch {
public:
    BfsOrderSearch(const Graph& g, const std::vector<std::vector<char>>& twin)
        : g_(g), twin_(twin) {}

    bool from_root(int root) {
        root_ = root;
        heights_ = bfs_heights(g_, root);
        int max_h = *std::max_element(heights_.begin(), heights_.end());
        layers_.assign(static_cast<std::size_t>(max_h + 1), {});
        for (int v = 0; v < g_.vertex_count(); ++v)
            layers_[static_cast<std::size_t>(heights_[static_cast<std::size_t>(v)])].push_back(v);
        for (std::size_t t = 1; t < layers_.size(); ++t) {
            int prev_min = layer_degree_extreme(t - 1, false);
            int cur_max = layer_degree_extreme(t, true);
            if (cur_max > prev_min) return false;
        }
        pos_.assign(static_cast<std::size_t>(g_.vertex_count()), -1);
        order_.clear();
        pos_[static_cast<std::size_t>(root)] = 0;
        order_.push_back(root);
        return place_in_layer(1, 0);
    }

private:
    int layer_degree_extreme(std::size_t t, bool want_max) const {
        int extreme = g_.degree(layers_[t].front());
        for (int v : layers_[t])
            extreme = want_max ? std::max(extreme, g_.degree(v)) : std::min(extreme, g_.degree(v));
        return extreme;
    }

    bool place_in_layer(std::size_t t, std::size_t idx) {
        if (t == layers_.size())
            return is_bfs_ordering(g_, order_, root_);
        const auto& layer = layers_[t];
        if (idx == layer.size()) {
            if (!layer_pair_ok(t)) return false;
            return place_in_layer(t + 1, 0);
        }
        int best_deg = -1;
        for (int v : layer)
            if (pos_[static_cast<std::size_t>(v)] < 0) best_deg = std::max(best_deg, g_.degree(v));
        for (int v : layer) {
            if (pos_[static_cast<std::size_t>(v)] >= 0 || g_.degree(v) != best_deg) continue;
            bool shadowed = false;
            for (int u : layer) {
                if (u < v && pos_[static_cast<std::size_t>(u)] < 0 &&
                    twin_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                    shadowed = true;
                    break;
                }
            }
            if (shadowed) continue;
            pos_[static_cast<std::size_t>(v)] = static_cast<int>(order_.size());
            order_.push_back(v);
            if (place_in_layer(t, idx + 1)) return true;
            order_.pop_back();
            pos_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    bool layer_pair_ok(std::size_t t) const {
        std::vector<std::pair<int, int>> cross;
        for (int u : layers_[t - 1])
            for (int w : g_.neighbors(u))
                if (heights_[static_cast<std::size_t>(w)] == static_cast<int>(t))
                    cross.emplace_back(u, w);
        for (std::size_t i = 0; i < cross.size(); ++i) {
            for (std::size_t j = 0; j < cross.size(); ++j) {
                if (i == j) continue;
                const auto [u, v] = cross[i];
                const auto [x, y] = cross[j];
                if (g_.has_edge(u, y) || g_.has_edge(x, v)) continue;
                if (pos_[static_cast<std::size_t>(u)] < pos_[static_cast<std::size_t>(x)] &&
                    pos_[static_cast<std::size_t>(v)] > pos_[static_cast<std::size_t>(y)])
                    return false;
            }
        }
        return true;
    }

    const Graph& g_;
    const std::vector<std::vector<char>>& twin_;
    int root_ = 0;
    std::vector<int> heights_;
    std::vector<std::vector<int>> layers_;
    std::vector<int> pos_;
    std::vector<int> order_;
};

class SloOrderSearch {
public:
    SloOrderSearch(const BoundaryGraph& bg, const std::vector<std::vector<char>>& twin)
        : bg_(bg), g_(bg.graph()), twin_(twin) {}

    bool from_root(int root) {
        root_ = root;
        heights_ = bfs_heights(g_, root);
        int max_interior_h = 0, min_boundary_h = g_.vertex_count();
        for (int v = 0; v < g_.vertex_count(); ++v) {
            int h = heights_[static_cast<std::size_t>(v)];
            if (bg_.is_boundary(v))
                min_boundary_h = std::min(min_boundary_h, h);
            else
                max_interior_h = std::max(max_interior_h, h);
        }
        if (!bg_.boundary().empty() && max_interior_h > min_boundary_h) return false;

        // Groups in forced order: interior height classes ascending, then
        // boundary height classes ascending.
        int max_h = *std::max_element(heights_.begin(), heights_.end());
        groups_.clear();
        group_interior_.clear();
        for (int part = 0; part < 2; ++part) {
            for (int h = 0; h <= max_h; ++h) {
                std::vector<int> group;
                for (int v = 0; v < g_.vertex_count(); ++v)
                    if (heights_[static_cast<std::size_t>(v)] == h &&
                        bg_.is_boundary(v) == (part == 1))
                        group.push_back(v);
                if (!group.empty()) {
                    groups_.push_back(std::move(group));
                    group_interior_.push_back(part == 0);
                }
            }
        }
        // Interior degrees must be nondecreasing across interior groups.
        int prev_max = 0;
        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            if (!group_interior_[gi]) continue;
            int lo = g_.degree(groups_[gi].front()), hi = lo;
            for (int v : groups_[gi]) {
                lo = std::min(lo, g_.degree(v));
                hi = std::max(hi, g_.degree(v));
            }
            if (lo < prev_max) return false;
            prev_max = hi;
        }
        pos_.assign(static_cast<std::size_t>(g_.vertex_count()), -1);
        order_.clear();
        return place_in_group(0, 0);
    }

private:
    bool place_in_group(std::size_t gi, std::size_t idx) {
        if (gi == groups_.size())
            return is_slo_ordering(bg_, order_, root_);
        const auto& group = groups_[gi];
        if (idx == group.size()) return place_in_group(gi + 1, 0);

        const bool interior = group_interior_[gi];
        int pick_deg = -1;
        if (interior) {
            for (int v : group)
                if (pos_[static_cast<std::size_t>(v)] < 0)
                    pick_deg = pick_deg < 0 ? g_.degree(v) : std::min(pick_deg, g_.degree(v));
        }
        for (int v : group) {
            if (pos_[static_cast<std::size_t>(v)] >= 0) continue;
            if (interior && g_.degree(v) != pick_deg) continue;
            bool shadowed = false;
            for (int u : group) {
                if (u < v && pos_[static_cast<std::size_t>(u)] < 0 &&
                    twin_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                    shadowed = true;
                    break;
                }
            }
            if (shadowed) continue;
            pos_[static_cast<std::size_t>(v)] = static_cast<int>(order_.size());
            order_.push_back(v);
            if (place_in_group(gi, idx + 1)) return true;
            order_.pop_back();
            pos_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const BoundaryGraph& bg_;
    const Graph& g_;
    const std::vector<std::vector<char>>& twin_;
    int root_ = 0;
    std::vector<int> heights_;
    std::vector<std::vector<int>> groups_;
    std::vector<char> group_interior_;
    std::vector<int> pos_;
    std::vector<int> order_;
};

}  // namespace

bool is_bfs_ordering(const Graph& g, const std::vector<int>& order, int root) {
    const std::vector<int> pos = inverse_permutation(g, order);
    if (order.front() != root)
        throw std::invalid_argument("ordering must start at the root");
    const std::vector<int> h = connected_heights(g, root, "is_bfs_ordering");
    for (std::size_t i = 1; i < order.size(); ++i) {
        int prev = order[i - 1], cur = order[i];
        if (h[static_cast<std::size_t>(prev)] > h[static_cast<std::size_t>(cur)]) return false;
        if (g.degree(prev) < g.degree(cur)) return false;
    }
    return cross_edge_condition(g, h, pos);
}

bool has_bfs_ordering_search(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("has_bfs_ordering: graph must be connected");
    const int n = g.vertex_count();
    if (n > kSearchCap)
        throw capacity_error("has_bfs_ordering: backtracking search capped at 16 vertices");
    if (n == 1) return true;

    const auto twin = twin_matrix(g);
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    BfsOrderSearch search(g, twin);
    for (int root = 0; root < n; ++root) {
        if (g.degree(root) != max_deg) continue;
        bool shadowed = false;
        for (int u = 0; u < root; ++u)
            if (twin[static_cast<std::size_t>(u)][static_cast<std::size_t>(root)]) {
                shadowed = true;
                break;
            }
        if (shadowed) continue;
        if (search.from_root(root)) return true;
    }
    return false;
}

bool has_bfs_ordering(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("has_bfs_ordering: graph must be connected");
    if (g.vertex_count() == 1) return true;
    if (g.is_tree()) {
        // A tree admits a BFS-ordering iff it is the greedy tree of its
        // degree sequence.
        return tree_canonical_code(g) ==
               tree_canonical_code(greedy_tree(g.degree_sequence()).graph());
    }
    return has_bfs_ordering_search(g);
}

bool is_slo_ordering(const BoundaryGraph& bg, const std::vector<int>& order, int root) {
    const Graph& g = bg.graph();
    const std::vector<int> pos = inverse_permutation(g, order);
    if (order.front() != root)
        throw std::invalid_argument("ordering must start at the root");
    if (bg.is_boundary(root))
        throw std::invalid_argument("is_slo_ordering: root must be interior");
    const std::vector<int> h = connected_heights(g, root, "is_slo_ordering");

    bool seen_boundary = false;
    int last_interior_degree = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        if (i > 0 && h[static_cast<std::size_t>(order[i - 1])] > h[static_cast<std::size_t>(v)])
            return false;
        if (bg.is_boundary(v)) {
            seen_boundary = true;
        } else {
            if (seen_boundary) return false;
            if (g.degree(v) < last_interior_degree) return false;
            last_interior_degree = g.degree(v);
        }
    }
    return cross_edge_condition(g, h, pos);
}

bool has_slo_ordering(const BoundaryGraph& bg) {
    const Graph& g = bg.graph();
    if (!g.is_connected())
        throw std::invalid_argument("has_slo_ordering: graph must be connected");
    if (g.vertex_count() > kSearchCap)
        throw capacity_error("has_slo_ordering: backtracking search capped at 16 vertices");

    const auto twin = twin_matrix(g);
    int min_interior_deg = g.vertex_count();
    for (int v : bg.interior()) min_interior_deg = std::min(min_interior_deg, g.degree(v));
    SloOrderSearch search(bg, twin);
    for (int root : bg.interior()) {
        if (g.degree(root) != min_interior_deg) continue;
        bool shadowed = false;
        for (int u : bg.interior())
            if (u < root && twin[static_cast<std::size_t>(u)][static_cast<std::size_t>(root)]) {
                shadowed = true;
                break;
            }
        if (shadowed) continue;
        if (search.from_root(root)) return true;
    }
    return false;
}

bool is_caterpillar(const Graph& tree) {
    if (!tree.is_tree())
        throw std::invalid_argument("is_caterpillar: input is not a tree");
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (tree.degree(v) < 2) continue;
        int internal_neighbors = 0;
        for (int w : tree.neighbors(v))
            if (tree.degree(w) >= 2) ++internal_neighbors;
        if (internal_neighbors > 2) return false;
    }
    return true;
}

std::vector<int> caterpillar_spine(const Graph& tree) {
    if (!is_caterpillar(tree))
        throw std::invalid_argument("caterpillar_spine: not a caterpillar");
    std::vector<int> internal;
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (tree.degree(v) >= 2) internal.push_back(v);
    if (internal.size() <= 1) return internal;

    auto internal_neighbors = [&](int v) {
        std::vector<int> out;
        for (int w : tree.neighbors(v))
            if (tree.degree(w) >= 2) out.push_back(w);
        return out;
    };
    int start = -1;
    for (int v : internal)
        if (internal_neighbors(v).size() == 1) {
            start = v;
            break;
        }
    std::vector<int> spine{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int w : internal_neighbors(cur))
            if (w != prev) next = w;
        if (next < 0) break;
        spine.push_back(next);
        prev = cur;
        cur = next;
    }
    return spine;
}

bool is_ball_approximation(const BoundaryGraph& bg) {
    const Graph& g = bg.graph();
    if (!g.is_connected())
        throw std::invalid_argument("is_ball_approximation: graph must be connected");
    for (int root : bg.interior()) {
        const std::vector<int> h = bfs_heights(g, root);
        int max_h = *std::max_element(h.begin(), h.end());
        std::vector<int> count(static_cast<std::size_t>(max_h + 1), 0);
        for (int d : h) ++count[static_cast<std::size_t>(d)];
        for (int r = 1; r <= max_h; ++r) {
            bool layers_ok = true;
            for (int i = 1; i < r; ++i)
                if (count[static_cast<std::size_t>(i + 1)] < count[static_cast<std::size_t>(i)]) {
                    layers_ok = false;
                    break;
                }
            if (!layers_ok) continue;
            bool boundary_ok = true;
            for (int v : bg.boundary()) {
                int d = h[static_cast<std::size_t>(v)];
                if (d != r && d != r + 1) {
                    boundary_ok = false;
                    break;
                }
            }
            if (boundary_ok) return true;
        }
    }
    return false;
}

}  // namespace degex
