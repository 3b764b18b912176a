// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include "cohomoforge/battery.hpp"

#include <iostream>

int main() {
    std::cout << "cohomoforge acceptance suite\n";
    std::vector<cf::CriterionResult> results = cf::run_acceptance_battery(&std::cout);
    int failed = 0;
    double total = 0;
    for (const cf::CriterionResult& r : results) {
        if (!r.pass) ++failed;
        total += r.seconds;
    }
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed in " << total
              << " s\n";
    return failed == 0 ? 0 : 1;
}
