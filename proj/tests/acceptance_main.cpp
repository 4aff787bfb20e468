// Acceptance runner: one line per criterion, nonzero exit on any failure.

#include <omp.h>
#include <cstdio>

#include "wrt/acceptance.hpp"

int main() {
    int failures = 0, warnings = 0, idx = 0;
    for (const auto& c : wrt::acceptance_criteria()) {
        double t0 = omp_get_wtime();
        wrt::CheckResult r = c.run();
        double dt = omp_get_wtime() - t0;
        const char* tag = r.passed ? (r.warned ? "WARN" : "PASS") : "FAIL";
        std::printf("[%s] %2d. %-13s (%6.2fs) %s\n", tag, ++idx, c.id.c_str(), dt,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failures;
        if (r.warned) ++warnings;
    }
    std::printf("%d/%d acceptance criteria passed", idx - failures, idx);
    if (warnings) std::printf(" (%d exploratory warning%s)", warnings, warnings > 1 ? "s" : "");
    std::printf("\n");
    return failures;
}
