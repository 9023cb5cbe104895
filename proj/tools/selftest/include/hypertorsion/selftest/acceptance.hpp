#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypertorsion::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double budget_seconds = 0;
    std::string detail;
};

struct Options {
    unsigned threads = 1;
    std::uint64_t seed = 20240607;
};

inline constexpr int criterion_count = 8;

/// Runs one acceptance criterion (1-based). A criterion passes only when
/// every check holds and it finishes within its time budget.
CriterionResult run_criterion(int id, const Options& opt);
std::vector<CriterionResult> run_all(const Options& opt);

/// "[PASS] 3 family enumeration GF(11) g=2 (0.12 s / 10 s): ..."
std::string format_line(const CriterionResult& r);

} // namespace hypertorsion::selftest
