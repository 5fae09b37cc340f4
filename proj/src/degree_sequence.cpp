#include "degex/degree_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace degex {

DegreeSequence::DegreeSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("degree sequence must be nonempty");
    for (int d : entries_) {
        if (d <= 0)
            throw std::invalid_argument("degree entries must be positive");
    }
    std::sort(entries_.rbegin(), entries_.rend());
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    std::vector<int> entries;
    std::string token;
    while (in >> token) {
        std::size_t consumed = 0;
        int value = 0;
        try {
            value = std::stoi(token, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("degree sequence token is not an integer: '" + token + "'");
        }
        if (consumed != token.size())
            throw std::invalid_argument("degree sequence token is not an integer: '" + token + "'");
        entries.push_back(value);
    }
    return DegreeSequence(std::move(entries));
}

long long DegreeSequence::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

int DegreeSequence::count_leaves() const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), 1));
}

std::vector<int> DegreeSequence::interior_ascending() const {
    std::vector<int> interior;
    for (int d : entries_)
        if (d >= 2) interior.push_back(d);
    std::sort(interior.begin(), interior.end());
    return interior;
}

std::string DegreeSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(entries_[i]);
    }
    return out;
}

std::string_view to_string(SequenceClass c) {
    switch (c) {
        case SequenceClass::not_graphic: return "not-graphic";
        case SequenceClass::forest_only: return "forest-only";
        case SequenceClass::tree: return "tree";
        case SequenceClass::unicyclic: return "unicyclic";
        case SequenceClass::bicyclic: return "bicyclic";
        case SequenceClass::general: return "general";
    }
    return "unknown";
}

bool is_graphic(const DegreeSequence& seq) {
    const auto& d = seq.entries();
    const int n = seq.size();
    if (d[0] > n - 1) return false;
    if (seq.sum() % 2 != 0) return false;
    long long lhs = 0;
    for (int r = 0; r + 1 < n; ++r) {
        lhs += d[static_cast<std::size_t>(r)];
        long long rhs = static_cast<long long>(r) * (r + 1);
        for (int i = r + 1; i < n; ++i)
            rhs += std::min(d[static_cast<std::size_t>(i)], r + 1);
        if (lhs > rhs) return false;
    }
    return true;
}

bool has_connected_realization(const DegreeSequence& seq) {
    // The sum bound is the classical edge-count criterion |E| >= n-1.
    return is_graphic(seq) && seq.sum() >= 2LL * (seq.size() - 1);
}

SequenceClass classify(const DegreeSequence& seq) {
    if (!is_graphic(seq)) return SequenceClass::not_graphic;
    const int n = seq.size();
    const long long sum = seq.sum();
    if (sum < 2LL * (n - 1)) return SequenceClass::forest_only;
    if (sum == 2LL * (n - 1)) return SequenceClass::tree;
    if (sum == 2LL * n)
        return (n >= 3 && seq[2] >= 2) ? SequenceClass::unicyclic : SequenceClass::general;
    if (sum == 2LL * (n + 1) && has_connected_realization(seq)) return SequenceClass::bicyclic;
    return SequenceClass::general;
}

Majorization majorizes(const DegreeSequence& tau, const DegreeSequence& pi) {
    if (tau.size() != pi.size()) return Majorization::none;
    long long tau_prefix = 0, pi_prefix = 0;
    for (int i = 0; i < tau.size(); ++i) {
        tau_prefix += tau[i];
        pi_prefix += pi[i];
        if (tau_prefix < pi_prefix) return Majorization::none;
    }
    if (tau_prefix != pi_prefix) return Majorization::weak;
    return tau.entries() == pi.entries() ? Majorization::none : Majorization::strict;
}

std::vector<DegreeSequence> majorization_chain(const DegreeSequence& pi, const DegreeSequence& tau) {
    if (majorizes(tau, pi) != Majorization::strict)
        throw std::invalid_argument("majorization_chain: tau must strictly majorize pi");
    if (!is_graphic(pi) || !is_graphic(tau))
        throw std::invalid_argument("majorization_chain: both sequences must be graphic");

    std::vector<DegreeSequence> chain{pi};
    std::vector<int> cur = pi.entries();
    const auto& target = tau.entries();
    const int n = static_cast<int>(cur.size());
    while (cur != target) {
        int i = 0;
        while (cur[static_cast<std::size_t>(i)] == target[static_cast<std::size_t>(i)]) ++i;
        // First surplus entry after i, extended to the end of its equal run
        // so the transfer keeps the sequence nonincreasing.
        int k = i + 1;
        while (cur[static_cast<std::size_t>(k)] <= target[static_cast<std::size_t>(k)]) ++k;
        int j = k;
        while (j + 1 < n && cur[static_cast<std::size_t>(j + 1)] == cur[static_cast<std::size_t>(k)]) ++j;
        ++cur[static_cast<std::size_t>(i)];
        --cur[static_cast<std::size_t>(j)];
        chain.emplace_back(cur);
    }
    return chain;
}

namespace {

void partitions_rec(int parts_left, int remaining, int max_part,
                    std::vector<int>& prefix, std::vector<DegreeSequence>& out) {
    if (parts_left == 0) {
        if (remaining == 0) out.emplace_back(prefix);
        return;
    }
    int hi = std::min(max_part, remaining - (parts_left - 1));
    for (int p = hi; p >= 1; --p) {
        if (remaining - p > static_cast<long long>(p) * (parts_left - 1)) break;
        prefix.push_back(p);
        partitions_rec(parts_left - 1, remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<DegreeSequence> enumerate_sequences_with_sum(int n, int total) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("enumerate_sequences_with_sum: n out of range [1,16]");
    std::vector<DegreeSequence> out;
    if (total < n || total > static_cast<long long>(n) * (n - 1)) return out;
    std::vector<int> prefix;
    partitions_rec(n, total, n - 1, prefix, out);
    return out;
}

std::vector<DegreeSequence> enumerate_tree_sequences(int n) {
    if (n < 2 || n > 12)
        throw std::invalid_argument("enumerate_tree_sequences: n out of range [2,12]");
    return enumerate_sequences_with_sum(n, 2 * (n - 1));
}

}  // namespace degex
