#ifndef LIESYM_REPORT_HPP
#define LIESYM_REPORT_HPP

#include <random>
#include <string>
#include <vector>

namespace liesym {

/// One verified claim inside a suite.  `verdict` is one of "symbolic-zero",
/// "numeric-zero", "nonzero", "error".
struct CaseResult {
    std::string case_label;
    std::string generator;
    std::string verdict;
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool pass() const;          // no nonzero/error case
    bool all_symbolic() const;  // every case symbolic-zero
    bool has_numeric() const;
    void sort_cases();          // deterministic order by (case, generator)
};

/// Exit status for a set of reports: 0 all symbolic passes, 2 passes with
/// numeric-zero verdicts, 1 any nonzero/error.
int exit_status(const std::vector<SuiteReport>& reports);

std::string to_text(const SuiteReport& r);
std::string to_json(const std::vector<SuiteReport>& reports);
/// Inverse of to_json; parse(print(reports)) == reports up to float printing.
std::vector<SuiteReport> reports_from_json(const std::string& text);

// Suite runners shared by the CLI and the acceptance tests. ------------------

/// Every cell of the equivalence-algebra commutator table against the
/// encoded structure relations.
SuiteReport run_commutator_suite();

/// Closed forms of the nontrivial adjoint actions against the Lie series
/// through the given epsilon order.
SuiteReport run_adjoint_suite(int order = 6);

/// The eight point-symmetry generators annihilate the unforced vorticity
/// equation on its solution manifold.
SuiteReport run_g0_suite();

/// Differential-invariant bases, operators of invariant differentiation and
/// functional ranks for the shipped invariant catalogs.
SuiteReport run_invariant_suite();

/// Equivalence-group checks: identity fixed points, gauge shifts are null
/// divergences, numeric pushforward consistency at on-manifold jet points,
/// and the subclass characterizations.
SuiteReport run_equivalence_suite(std::mt19937_64& g, int gauge_samples = 50,
                                  int transformations = 20, int points = 5);

/// verify_table_entry over every row of the requested table (1-4).
SuiteReport run_table_suite(int table);

} // namespace liesym

#endif
