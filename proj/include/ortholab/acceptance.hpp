#ifndef ORTHOLAB_ACCEPTANCE_HPP
#define ORTHOLAB_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace ortholab::acceptance {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    double worst_err = 0.0;  // worst relative (or scaled absolute) error seen
    double tolerance = 0.0;
    long long runtime_ms = 0;
    std::string detail; // one-line diagnostics
};

// Runs the twelve acceptance criteria at their pinned tolerances.
std::vector<CriterionResult> run_all();

// One "[PASS]/[FAIL] i. name ..." line per criterion.
std::string format_line(const CriterionResult& r);

} // namespace ortholab::acceptance

#endif
