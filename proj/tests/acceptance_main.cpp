// Acceptance gate: runs every criterion at its pinned tolerance and prints
// one pass/fail line per criterion.  Exit code 0 iff all pass.
#include <cstdio>

#include "ortholab/acceptance.hpp"

int main() {
    const auto results = ortholab::acceptance::run_all();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s\n", ortholab::acceptance::format_line(r).c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%d/%zu acceptance criteria passed\n",
                static_cast<int>(results.size()) - failures, results.size());
    return failures == 0 ? 0 : 1;
}
