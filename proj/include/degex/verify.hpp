#ifndef DEGEX_VERIFY_HPP
#define DEGEX_VERIFY_HPP

#include <string>
#include <vector>

#include "degex/degree_sequence.hpp"
#include "degex/invariants.hpp"

namespace degex {

enum class SuiteStatus { pass, fail, tie_resolved, report_only };
std::string_view to_string(SuiteStatus s);

struct VerificationReport {
    std::string tag;
    std::string sequence;       // sequence text or parameter description
    int classes = 0;            // isomorphism classes enumerated
    std::string optimum;        // optimum value, exact text for integers
    std::string optimizer_code; // canonical code of the enumerated optimizer
    std::string constructed_code;
    SuiteStatus status = SuiteStatus::fail;
    std::string detail;
    double elapsed_ms = 0.0;

    bool passed() const { return status != SuiteStatus::fail; }
};

// Cross-graph decision tolerance for real-valued invariants; integer
// invariants compare exactly.
inline constexpr double kDecisionTol = 1e-8;

// Closed tag registry; unknown tags are errors.
const std::vector<std::string>& suite_registry();
bool is_known_suite(const std::string& tag);

// Per-sequence tree suites. Tags: rho-max, lambda-max, q-max, wiener-min,
// pr-max, zagreb2-max, subtrees-max, hosoya-min, ms-max, energy-min,
// greedy-equivalence.
VerificationReport verify_tree_theorem(const std::string& tag, const DegreeSequence& pi);

// Majorization comparisons between greedy trees over all strictly
// comparable tree-sequence pairs of length n. Tags: majorization-rho,
// -lambda, -q, -wiener, -energy, -hosoya, -ms, -subtrees.
std::vector<VerificationReport> verify_majorization(const std::string& tag, int n);

// Every W_psi-maximizing class is a caterpillar; records the spine
// unimodality predicate. psi must be strictly increasing and convex.
VerificationReport verify_caterpillar_max(const DegreeSequence& pi, const PsiFunction& psi);

// Dirichlet suites.
VerificationReport verify_dirichlet_tree(const DegreeSequence& pi);
VerificationReport verify_dirichlet_unicyclic(const DegreeSequence& pi);   // interior degrees >= 3
VerificationReport verify_dirichlet_conjecture(const DegreeSequence& pi);  // report-only
VerificationReport verify_dirichlet_bicyclic(const DegreeSequence& pi);
VerificationReport verify_dirichlet_pendant(int n, int k);

// Spectral argmax over all connected realizations has a BFS-ordering.
// matrix: adjacency or signless.
VerificationReport verify_bfs_necessity(const DegreeSequence& pi, MatrixKind matrix);

// Runs the selected suites over every admissible input up to n_max
// (clamped to each suite's capacity), in deterministic order:
// by n, then sequence, then tag. Failures are recorded, never thrown.
std::vector<VerificationReport> sweep(int n_max, const std::vector<std::string>& suites);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace degex

#endif
