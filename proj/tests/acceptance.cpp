// Reproduction suite: one pass/fail line per criterion, nonzero exit on any
// failure.  The same criteria back the CLI `check` subcommand.

#include <iostream>

#include "ihsat/checks.hpp"

int main() {
    auto results = ihsat::run_acceptance(ihsat::DatasetRegistry::builtin());
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "\n";
        if (!r.detail.empty()) std::cout << "      " << r.detail << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all_pass ? 0 : 1;
}
