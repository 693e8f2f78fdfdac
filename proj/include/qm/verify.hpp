#pragma once

// Exhaustive verification suites for the identities of the stratification
// machinery and the appendix relations, with structured reports.

#include "qm/pbw.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qm {

struct RunOptions {
    int n = 0;  // 0: the suite's default bound
    std::uint64_t seed = 20240517;
    int degree_bound = 4;  // generation checks in S16
    int words = 1000;      // random words in S1
    bool parallel = true;
};

struct Failure {
    std::string description;
    std::string lhs;
    std::string rhs;
    std::string replay;  // CLI invocation reproducing the comparison, when one exists
    std::vector<std::string> ideal;  // generators when the check was a congruence
};

struct SuiteReport {
    std::string id;
    std::string name;
    int n = 0;
    RunOptions options;
    std::size_t cases = 0;
    std::vector<Failure> failures;
    double elapsed_seconds = 0;
    [[nodiscard]] bool pass() const { return failures.empty(); }
};

struct SuiteInfo {
    std::string id;    // "S4"
    std::string name;  // "lemma52"
    int default_n;
    std::string summary;
};

const std::vector<SuiteInfo>& suite_catalog();
/// Accepts "S4", "s4" or "lemma52"; throws UnknownSuite.
const SuiteInfo& find_suite(const std::string& key);
SuiteReport run_suite(const std::string& key, const RunOptions& options = {});
/// Every suite at its default bound (options.n ignored).
std::vector<SuiteReport> run_all(const RunOptions& options = {});

std::string report_json(const SuiteReport& r, int indent = 2);
std::string reports_json(const std::vector<SuiteReport>& rs, int indent = 2);

/// Bounded-degree comparison of dim ker(beta_rc) and dim K_rc per multidegree.
struct ConjectureEvidence {
    int n = 0;
    int max_degree = 0;
    std::size_t components = 0;  // (pair, multidegree) comparisons
    std::size_t equal = 0;
    std::vector<std::string> mismatches;
    double elapsed_seconds = 0;
};
ConjectureEvidence conjecture_evidence(int n, int max_degree, bool parallel = true);
std::string evidence_json(const ConjectureEvidence& e, int indent = 2);

}  // namespace qm
