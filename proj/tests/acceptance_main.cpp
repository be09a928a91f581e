// Acceptance gate: one line per criterion, non-zero exit on any failure.
#include <cstdio>

#include "liouspace/verify.hpp"

int main() {
    const auto results = liouspace::verify::run_acceptance();
    std::size_t passed = 0;
    for (const auto& r : results) {
        std::printf("%-4s %-52s %s", r.id.c_str(), r.title.c_str(),
                    r.pass ? "PASS" : "FAIL");
        if (!r.detail.empty()) std::printf("  [%s]", r.detail.c_str());
        std::printf("\n");
        if (r.pass) ++passed;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", passed, results.size());
    return passed == results.size() ? 0 : 1;
}
