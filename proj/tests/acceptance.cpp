// Acceptance gate: runs every claim check and prints one line per claim.
// Exit status 0 means everything executed passed; skipped sweeps (quick
// suite) do not fail the gate, partial results do.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "bihyp/suite.hpp"

namespace {

const char* tag(const std::string& status) {
    if (status == "pass") return "[PASS]";
    if (status == "fail") return "[FAIL]";
    if (status == "skip") return "[SKIP]";
    if (status == "partial") return "[PARTIAL]";
    return "[????]";
}

int usage(const char* prog) {
    std::fprintf(stderr,
                 "usage: %s [--suite quick|paper] [--jobs N] [--seed S]\n"
                 "          [--budget-ms MS] [--store-dir DIR]\n",
                 prog);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    std::string suite = "paper";
    bihyp::SuiteOptions opts;

    for (int i = 1; i < argc; ++i) {
        auto value = [&]() -> const char* {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "%s needs a value\n", argv[i]);
                std::exit(2);
            }
            return argv[++i];
        };
        if (!std::strcmp(argv[i], "--suite")) suite = value();
        else if (!std::strcmp(argv[i], "--jobs")) opts.jobs = std::atoi(value());
        else if (!std::strcmp(argv[i], "--seed"))
            opts.seed = std::strtoull(value(), nullptr, 10);
        else if (!std::strcmp(argv[i], "--budget-ms"))
            opts.sweep_budget_ms = std::atoll(value());
        else if (!std::strcmp(argv[i], "--store-dir")) opts.store_dir = value();
        else return usage(argv[0]);
    }

    bihyp::SuiteResult result;
    try {
        result = bihyp::run_suite(suite, opts);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    for (const bihyp::CriterionResult& c : result.criteria)
        std::printf("%s %d %s (%lld ms): %s\n", tag(c.status), c.id,
                    c.name.c_str(), c.elapsed_ms, c.detail.c_str());

    std::printf("%s suite: %s\n", result.suite.c_str(),
                result.all_passed ? "all claims hold" : "CLAIMS FAILED");
    return result.all_passed ? 0 : 1;
}
