#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace contactloc {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

// Knobs of the verification suite.  quick shrinks the Monte Carlo sample
// counts and widens the statistical tolerances to 5 standard errors;
// perturb_euler injects an offset into the localization identity as a
// negative control (any nonzero value must make check 2 fail).
struct VerifyOptions {
    bool quick = false;
    double perturb_euler = 0.0;
    std::uint64_t seed = 2026;
    std::size_t mc_samples = 10000000;
    int workers = 4;
};

// Runs the nine acceptance checks in order; each result carries measured
// details and wall time.  Exceptions inside a check mark it failed rather
// than aborting the suite.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

// One line per check: "[PASS] 3 quotient pairing on the weighted 3-sphere
// (0.01 s) details".
void print_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace contactloc
