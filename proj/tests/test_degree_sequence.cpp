#include "doctest.h"

#include <stdexcept>

#include <set>

#include "degex/degree_sequence.hpp"
#include "oracle.hpp"

using namespace degex;

TEST_CASE("parsing accepts commas and whitespace and sorts") {
    CHECK(DegreeSequence::parse("3,3,2,1,1").entries() == std::vector<int>{3, 3, 2, 1, 1});
    CHECK(DegreeSequence::parse("1 2 3").entries() == std::vector<int>{3, 2, 1});
    CHECK(DegreeSequence::parse(" 4  4,3 3,3 3 2 1 1 1 1 1 1 1 1 1 1").size() == 17);
    CHECK_THROWS_AS(DegreeSequence::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence::parse("2 0 1"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence::parse("2 -1"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence::parse("2 x"), std::invalid_argument);
}

TEST_CASE("graphicality examples") {
    CHECK(is_graphic(DegreeSequence::parse("3 3 3 3")));
    CHECK_FALSE(is_graphic(DegreeSequence::parse("3 3 1 1")));
    CHECK(is_graphic(DegreeSequence::parse("4 4 3 3 3 3 2 1 1 1 1 1 1 1 1 1 1")));
    CHECK_FALSE(is_graphic(DegreeSequence::parse("5 1 1 1")));
    CHECK_FALSE(is_graphic(DegreeSequence::parse("1")));
}

TEST_CASE("graphicality agrees with the labeled-graph scan up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& seq : oracle::all_positive_sequences(n, n)) {
            DegreeSequence pi{seq};
            CHECK_MESSAGE(is_graphic(pi) == oracle::is_realizable(seq), pi.to_string());
        }
    }
}

TEST_CASE("connected realizability") {
    CHECK(has_connected_realization(DegreeSequence::parse("2 2 2 2")));
    CHECK_FALSE(has_connected_realization(DegreeSequence::parse("1 1 1 1")));
    // Sum 8 < 2(n-1) = 10: every realization is disconnected, and the
    // labeled-graph oracle agrees.
    DegreeSequence two_paths = DegreeSequence::parse("2 1 1 2 1 1");
    CHECK(two_paths.entries() == std::vector<int>{2, 2, 1, 1, 1, 1});
    CHECK_FALSE(has_connected_realization(two_paths));
    CHECK_FALSE(oracle::is_realizable(two_paths.entries(), true));
    for (int n = 2; n <= 6; ++n)
        for (const auto& seq : oracle::all_positive_sequences(n, n - 1)) {
            DegreeSequence pi{seq};
            CHECK(has_connected_realization(pi) == oracle::is_realizable(seq, true));
        }
}

TEST_CASE("classification") {
    CHECK(classify(DegreeSequence::parse("4 4 3 3 3 3 2 1 1 1 1 1 1 1 1 1 1")) ==
          SequenceClass::tree);
    CHECK(classify(DegreeSequence::parse("3 3 2 1 1")) == SequenceClass::unicyclic);
    CHECK(classify(DegreeSequence::parse("2 2 1 1 1 1")) == SequenceClass::forest_only);
    CHECK(classify(DegreeSequence::parse("3 3 1 1")) == SequenceClass::not_graphic);
    CHECK(classify(DegreeSequence::parse("3 3 3 3")) == SequenceClass::general);
    CHECK(classify(DegreeSequence::parse("3 3 3 3 1 1")) == SequenceClass::bicyclic);
    CHECK(classify(DegreeSequence::parse("2 2 2")) == SequenceClass::unicyclic);
    CHECK(classify(DegreeSequence::parse("1 1")) == SequenceClass::tree);
}

TEST_CASE("majorization comparisons") {
    auto strict = [](const char* t, const char* p) {
        return majorizes(DegreeSequence::parse(t), DegreeSequence::parse(p));
    };
    CHECK(strict("3 1 1 1", "2 2 1 1") == Majorization::strict);
    CHECK(strict("2 2 2", "2 2 2") == Majorization::none);
    CHECK(strict("3 2 1", "2 2 2") == Majorization::strict);
    CHECK(strict("3 2", "2 2") == Majorization::weak);
    CHECK(strict("2 2 1 1", "3 1 1 1") == Majorization::none);
    CHECK(strict("3 2 1", "2 2 1 1") == Majorization::none);
}

TEST_CASE("majorization is a strict partial order on tree sequences of length 8") {
    const auto seqs = enumerate_tree_sequences(8);
    for (const auto& a : seqs) CHECK(majorizes(a, a) == Majorization::none);
    for (const auto& a : seqs)
        for (const auto& b : seqs) {
            if (majorizes(a, b) == Majorization::strict)
                CHECK(majorizes(b, a) == Majorization::none);
            for (const auto& c : seqs)
                if (majorizes(a, b) == Majorization::strict &&
                    majorizes(b, c) == Majorization::strict)
                    CHECK(majorizes(a, c) == Majorization::strict);
        }
}

TEST_CASE("majorization chains") {
    const auto p4 = DegreeSequence::parse("2 2 1 1");
    const auto star4 = DegreeSequence::parse("3 1 1 1");
    const auto chain = majorization_chain(p4, star4);
    REQUIRE(chain.size() == 2);
    CHECK(chain.front() == p4);
    CHECK(chain.back() == star4);

    const auto longer = majorization_chain(DegreeSequence::parse("2 2 2 2 1 1"),
                                           DegreeSequence::parse("4 2 1 1 1 1"));
    CHECK(longer.size() == 3);

    CHECK_THROWS_AS(majorization_chain(p4, p4), std::invalid_argument);
    CHECK_THROWS_AS(majorization_chain(star4, p4), std::invalid_argument);
}

TEST_CASE("chains work for general graphic sequences and reject non-graphic input") {
    // (2,2,2,2) < (3,2,2,1): one transfer between unicyclic-sum sequences.
    const auto chain = majorization_chain(DegreeSequence::parse("2 2 2 2"),
                                          DegreeSequence::parse("3 2 2 1"));
    CHECK(chain.size() == 2);

    // (3,3,1,1) strictly majorizes (2,2,2,2) but is not graphic.
    CHECK(majorizes(DegreeSequence::parse("3 3 1 1"), DegreeSequence::parse("2 2 2 2")) ==
          Majorization::strict);
    CHECK_THROWS_AS(majorization_chain(DegreeSequence::parse("2 2 2 2"),
                                       DegreeSequence::parse("3 3 1 1")),
                    std::invalid_argument);

    // All strictly comparable graphic pairs with unicyclic sum at n <= 7.
    for (int n = 4; n <= 7; ++n) {
        std::vector<DegreeSequence> graphic;
        for (const auto& seq : enumerate_sequences_with_sum(n, 2 * n))
            if (is_graphic(seq)) graphic.push_back(seq);
        for (const auto& pi : graphic)
            for (const auto& tau : graphic) {
                if (majorizes(tau, pi) != Majorization::strict) continue;
                for (const auto& step : majorization_chain(pi, tau))
                    CHECK(is_graphic(step));
            }
    }
}

TEST_CASE("every chain step is a graphic unit transfer, all tree pairs n <= 8") {
    for (int n = 4; n <= 8; ++n) {
        const auto seqs = enumerate_tree_sequences(n);
        for (const auto& pi : seqs)
            for (const auto& tau : seqs) {
                if (majorizes(tau, pi) != Majorization::strict) continue;
                const auto chain = majorization_chain(pi, tau);
                REQUIRE(chain.size() >= 2);
                CHECK(chain.front() == pi);
                CHECK(chain.back() == tau);
                for (std::size_t i = 0; i < chain.size(); ++i) {
                    CHECK(is_graphic(chain[i]));
                    CHECK(chain[i].sum() == pi.sum());
                    if (i == 0) continue;
                    CHECK(majorizes(chain[i], chain[i - 1]) == Majorization::strict);
                    int plus = 0, minus = 0;
                    for (int j = 0; j < chain[i].size(); ++j) {
                        int diff = chain[i][j] - chain[i - 1][j];
                        if (diff == 1) ++plus;
                        else if (diff == -1) ++minus;
                        else CHECK(diff == 0);
                    }
                    CHECK(plus == 1);
                    CHECK(minus == 1);
                }
            }
    }
}

TEST_CASE("tree sequence enumeration") {
    auto to_texts = [](const std::vector<DegreeSequence>& seqs) {
        std::vector<std::string> out;
        for (const auto& s : seqs) out.push_back(s.to_string());
        return out;
    };
    CHECK(to_texts(enumerate_tree_sequences(3)) == std::vector<std::string>{"2 1 1"});
    CHECK(to_texts(enumerate_tree_sequences(4)) ==
          std::vector<std::string>{"3 1 1 1", "2 2 1 1"});
    CHECK(to_texts(enumerate_tree_sequences(5)) ==
          std::vector<std::string>{"4 1 1 1 1", "3 2 1 1 1", "2 2 2 1 1"});
    CHECK_THROWS_AS(enumerate_tree_sequences(1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_tree_sequences(13), std::invalid_argument);
    for (int n = 2; n <= 12; ++n)
        for (const auto& seq : enumerate_tree_sequences(n))
            CHECK(classify(seq) == SequenceClass::tree);
}

TEST_CASE("tree sequence count matches Prufer degree multisets, n <= 7") {
    for (int n = 3; n <= 7; ++n) {
        std::set<std::vector<int>> multisets;
        std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
        while (true) {
            degex::Graph t = oracle::prufer_decode(code, n);
            multisets.insert(t.degree_sequence().entries());
            int i = n - 3;
            while (i >= 0 && code[static_cast<std::size_t>(i)] == n - 1) {
                code[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++code[static_cast<std::size_t>(i)];
        }
        CHECK(multisets.size() == enumerate_tree_sequences(n).size());
    }
}
