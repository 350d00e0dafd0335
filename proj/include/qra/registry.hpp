#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qra {

struct CheckReport {
    std::string name;
    // grid actually exercised, e.g. {{"n", 3}, {"r", 3}}
    std::vector<std::pair<std::string, long>> grid;
    // "pass" | "fail" | "finding"; entries flagged as conjectures report a
    // mismatch as "finding" instead of "fail"
    std::string status;
    std::string detail;  // first counterexample, empty on pass
    double seconds = 0.0;
};

struct RegistryOptions {
    long max_r = 3;
    long max_s = 3;
    long max_n = 3;
    long tensor_rank = 4;  // cap on faithful-oracle rank
    bool include_mutants = false;
    bool timings = false;
    // empty: run every non-mutant entry; otherwise exact-name filter
    std::vector<std::string> selection;
};

std::vector<std::string> registry_check_names(bool include_mutants = false);
std::vector<CheckReport> run_registry(const RegistryOptions& opt = {});

// mutant rows count as expected when they fail; everything else must pass
bool registry_all_pass(const std::vector<CheckReport>& reports);
std::string registry_report_json(const std::vector<CheckReport>& reports,
                                 bool timings, bool pretty);

}  // namespace qra
