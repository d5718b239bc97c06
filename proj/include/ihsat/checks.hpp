#pragma once

#include <string>
#include <vector>

#include "ihsat/dataset.hpp"

namespace ihsat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // expected-vs-actual on failure, brief confirmation on success
};

// The full reproduction suite: genus 2/3/4 tables, the blow-down row, the
// link table with its pairwise sums, the Gysin assembly, the property
// checks, and the fault-injection probe.  Each criterion is independent.
std::vector<CriterionResult> run_acceptance(const DatasetRegistry& registry);

// A registry with V[2,2] removed from the degree-4 entry of the fiber table
// over A_2 in rank 4 (the fault-injection input).
DatasetRegistry corrupt_f24_registry(const DatasetRegistry& base);

}  // namespace ihsat
