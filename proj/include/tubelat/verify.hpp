#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tubelat {

struct VerifyOptions {
    // Caps every "for all n <= N" sweep; fixed-size checks ignore it.
    int max_n = 7;
    int jobs = 1;
    // Also report the Möbius values on non-lattice L_G (never asserted).
    bool conjecture = false;
};

struct CheckOutcome {
    bool pass = false;
    std::string detail;
};

struct Check {
    std::string id;
    std::string title;
    std::function<CheckOutcome(const VerifyOptions&)> run;
};

struct CheckResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// The acceptance criteria, ids "1" through "11".
std::vector<Check> criteria_checks();
// The worked examples with published values.
std::vector<Check> example_checks();
// "criteria", "examples" or "all"; throws std::invalid_argument otherwise.
std::vector<Check> suite(const std::string& name);

// Runs the checks in order; a thrown exception counts as a failure.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, const VerifyOptions& opts,
                                    const std::function<void(const CheckResult&)>& on_result = {});

} // namespace tubelat
