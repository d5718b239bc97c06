#pragma once

#include <vector>

namespace ihsat {

// The stratification of the rank-g Satake space by smaller moduli strata:
// s_k = k(k+1)/2 for k = 0..g, total dimension n = g(g+1)/2, plus the fiber
// dimensions f_k of the contraction over each proper stratum.
struct Stratification {
    int genus = 0;
    std::vector<int> strata_dims;  // s_0 .. s_g
    int total_dim = 0;             // n = s_g
    std::vector<int> fiber_dims;   // f_0 .. f_{g-1}

    int s(int k) const { return strata_dims[static_cast<std::size_t>(k)]; }
    int f(int k) const { return fiber_dims[static_cast<std::size_t>(k)]; }
    int codim(int k) const { return total_dim - s(k); }
};

// fiber_dims must have one entry per proper stratum k = 0..g-1.
// Throws BadDimsError on negative dimensions or wrong count.
Stratification make_stratification(int g, const std::vector<int>& fiber_dims);

// max_k (2 f_k + s_k - n), floored at 0 for the open stratum.  Zero means
// the contraction is semi-small.
int defect(const Stratification& strat);

}  // namespace ihsat
