#ifndef BIHYP_SUITE_HPP
#define BIHYP_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bihyp {

struct SuiteOptions {
    int jobs = 1;
    std::string store_dir;  // defaults to <cwd>/verify-store
    std::uint64_t seed = 20260814;
    // Wall-clock budget for the order-7 sweep; exceeding it falls back to
    // max_edges = 7 and marks the claim "partial".
    long long sweep_budget_ms = 60LL * 60 * 1000;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::string status;  // pass | fail | skip | partial
    std::string detail;
    long long elapsed_ms = 0;
};

struct SuiteResult {
    std::string suite;  // quick | paper
    std::vector<CriterionResult> criteria;
    bool all_passed = false;   // no fail and no partial among executed
    bool any_failed = false;
    bool any_partial = false;
};

// quick: every claim that needs no exhaustive sweep; paper: everything.
SuiteResult run_suite(const std::string& suite, const SuiteOptions& opts = {});

std::string suite_to_json(const SuiteResult& r);

}  // namespace bihyp

#endif
