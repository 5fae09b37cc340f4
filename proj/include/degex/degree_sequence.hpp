#ifndef DEGEX_DEGREE_SEQUENCE_HPP
#define DEGEX_DEGREE_SEQUENCE_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace degex {

// Nonincreasing sequence of positive vertex degrees. Input order is never
// preserved: entries are sorted on construction. Zero entries are rejected.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> entries);

    // Accepts comma- or whitespace-separated positive integers,
    // e.g. "4 4 3 3 3 3 2 1 1 1 1 1 1 1 1 1 1" or "3,3,2,1,1".
    static DegreeSequence parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }
    long long sum() const;
    int count_leaves() const;                 // number of entries equal to 1
    std::vector<int> interior_ascending() const;  // entries >= 2, sorted ascending

    std::string to_string() const;            // space-separated

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> entries_;
};

enum class SequenceClass { not_graphic, forest_only, tree, unicyclic, bicyclic, general };
std::string_view to_string(SequenceClass c);

enum class Majorization { strict, weak, none };

// Erdos-Gallai test: even sum and all prefix inequalities.
bool is_graphic(const DegreeSequence& seq);

// Graphic with a connected realization: positive entries and sum >= 2(n-1).
bool has_connected_realization(const DegreeSequence& seq);

SequenceClass classify(const DegreeSequence& seq);

// Whether tau majorizes pi. Sequences of different length compare as none;
// equal sequences are not strictly comparable.
Majorization majorizes(const DegreeSequence& tau, const DegreeSequence& pi);

// Unit-transfer chain pi = s_0 < s_1 < ... < s_m = tau where consecutive
// sequences differ in exactly two entries, one raised and one lowered by 1.
// Requires majorizes(tau, pi) == strict and both sequences graphic. Every
// intermediate is nonincreasing and graphic; the total is preserved.
std::vector<DegreeSequence> majorization_chain(const DegreeSequence& pi, const DegreeSequence& tau);

// All tree degree sequences of length n (partitions of 2(n-1) into n
// positive parts), in decreasing lexicographic order. Requires 2 <= n <= 12.
std::vector<DegreeSequence> enumerate_tree_sequences(int n);

// All nonincreasing sequences of length n with entries in [1, n-1] and the
// given sum, in decreasing lexicographic order. Sweep plumbing.
std::vector<DegreeSequence> enumerate_sequences_with_sum(int n, int total);

}  // namespace degex

#endif
