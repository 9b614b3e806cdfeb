#ifndef UBIM_VERIFY_HPP
#define UBIM_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ubim/coeff_engine.hpp"

namespace ubim {

// Acceptance suite shared by the verify command and the acceptance test
// binary: each criterion reports what was measured against what it needed.

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string measured;
    std::string required;
    double seconds = 0.0;
};

struct VerifyOptions {
    const KappaTable* table = nullptr; // imported higher kappa orders, if any
};

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt,
                                            std::ostream* progress = nullptr);

// One "[PASS] ..." / "[FAIL] ..." line per criterion; returns the failure count.
int print_report(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace ubim

#endif
