#pragma once

#include <string>
#include <vector>

namespace qtones::verify {

/// One end-to-end check with its measured statistic against the pinned
/// tolerance. `measured` compares against `tolerance` in the direction given
/// by `at_least`: false means measured must stay below tolerance (an error
/// bound), true means it must reach it (a success weight).
struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    bool at_least = false;
    std::string detail;
};

/// Runs the full verification suite (transform equivalence, worked examples,
/// Fourier-state round trips, tone/chord/DTMF detection, oracle equivalence,
/// sparse factorization, shot sampling, property suites). Deterministic:
/// all randomness is internally seeded.
std::vector<CheckResult> run_all_checks();

/// One fixed-width line per check: status, name, measured vs tolerance.
std::string format_check_line(const CheckResult& r, std::size_t index, std::size_t total);

} // namespace qtones::verify
