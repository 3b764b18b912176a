#pragma once

#include "cohomoforge/catalog.hpp"
#include "cohomoforge/liering.hpp"

#include <iosfwd>

namespace cf {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;  // 0 = no stated runtime target
};

struct NamedLieModule {
    std::string name;
    LieModule module;
    std::optional<FpMat> pmap;
};

// Lie rings and modules exercised by the acceptance battery.
const std::vector<NamedLieModule>& lie_module_catalog();

// The acceptance criteria, one runner per criterion; `log` gets one line per
// criterion as it finishes.
std::vector<CriterionResult> run_acceptance_battery(std::ostream* log = nullptr);

}  // namespace cf
