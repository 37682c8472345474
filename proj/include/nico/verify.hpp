#pragma once

#include <string>
#include <vector>

namespace nico {

struct CheckResult {
    std::string id;
    std::string area;
    bool pass = false;
    std::string value;      // observed
    std::string expected;   // target
    std::string tolerance;  // "exact" or a decimal bound
    std::string detail;     // one-line diagnostics on failure
    double ms = 0.0;
};

/// Every verification check, in canonical order, optionally filtered by
/// area.  Throws std::invalid_argument for an unknown area label.
std::vector<CheckResult> run_checks(const std::vector<std::string>& only_areas = {});

const std::vector<std::string>& check_areas();

}  // namespace nico
