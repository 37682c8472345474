// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "nico/verify.hpp"

int main() {
    std::vector<nico::CheckResult> results;
    try {
        results = nico::run_checks();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
        return 1;
    }

    int failures = 0;
    int index = 0;
    for (const auto& r : results) {
        ++index;
        std::printf("%s  %2d  %s (%s)  [%.0f ms]\n", r.pass ? "PASS" : "FAIL", index,
                    r.id.c_str(), r.area.c_str(), r.ms);
        if (!r.pass) {
            ++failures;
            std::printf("      value:    %s\n      expected: %s (tolerance %s)\n",
                        r.value.c_str(), r.expected.c_str(), r.tolerance.c_str());
            if (!r.detail.empty()) std::printf("      %s\n", r.detail.c_str());
        }
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
