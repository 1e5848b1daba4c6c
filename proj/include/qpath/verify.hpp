#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpath {

struct VerifyConfig {
    std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    int max_m = 4;
    int max_n = 4;
    int max_k = 3;
    int min_double_flows = 200;
    int min_pairs_per_case = 500;
    int min_weight_paths = 10000;
    std::string only;  // empty runs every suite
};

struct SuiteResult {
    std::string name;
    long checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct VerifySummary {
    std::vector<SuiteResult> suites;
    bool ok() const;
    long total_checked() const;
    std::string to_json() const;
    std::string to_text() const;
};

VerifySummary run_verify(const VerifyConfig& cfg);

}  // namespace qpath
