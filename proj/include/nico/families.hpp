#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nico/sequence.hpp"
#include "nico/surd.hpp"

namespace nico {

struct ParamSpec {
    std::string name;
    long lo, hi;  // inclusive; coupled constraints are enforced by the generator
};

/// A named construction as data: generator, exact expected nu, and the
/// default verification grid.  Generators are total on their declared
/// domains and throw on anything else.
struct FamilyDescriptor {
    std::string name;
    std::vector<ParamSpec> params;
    std::string note;
    std::function<Sequence(const std::vector<long>&)> generate;
    std::function<QuadSurd(const std::vector<long>&)> expected_nu;
    std::vector<std::vector<long>> default_grid;
};

const std::vector<FamilyDescriptor>& registry();
const FamilyDescriptor& find_family(const std::string& name);
/// Validates the parameter count and declared bounds, then generates.
Sequence make_family_sequence(const std::string& name, const std::vector<long>& params);

struct FamilyReport {
    std::string family;
    std::vector<long> params;
    QuadSurd nu_value, expected;
    bool pass = false;
    std::size_t size = 0;
    double ms = 0.0;
};

FamilyReport verify_family(const std::string& name, const std::vector<long>& params);
/// Every family over its default grid.
std::vector<FamilyReport> verify_all();

/// {1..19} with 6 and 13 shifted by 5/2; sum 195, nu = 0.
Sequence tau_sequence();
/// (-1 + sqrt(5))/4, the scale factor sending {2,4,6} of {1..6} to a
/// nu = 0 configuration; 2x is the inverse golden ratio.
QuadSurd golden_x();
/// {1, 2x, 3, 4x, 5, 6x} over Q(sqrt(5)).
Sequence golden_base();

}  // namespace nico
