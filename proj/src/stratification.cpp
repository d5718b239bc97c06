#include "ihsat/stratification.hpp"

#include <algorithm>

#include "ihsat/errors.hpp"

namespace ihsat {

Stratification make_stratification(int g, const std::vector<int>& fiber_dims) {
    if (g < 1) throw BadDimsError("stratification needs genus >= 1");
    if (static_cast<int>(fiber_dims.size()) != g)
        throw BadDimsError("expected " + std::to_string(g) + " fiber dimensions, got " +
                           std::to_string(fiber_dims.size()));
    for (int f : fiber_dims)
        if (f < 0) throw BadDimsError("negative fiber dimension");
    Stratification strat;
    strat.genus = g;
    strat.strata_dims.resize(static_cast<std::size_t>(g) + 1);
    for (int k = 0; k <= g; ++k) strat.strata_dims[static_cast<std::size_t>(k)] = k * (k + 1) / 2;
    strat.total_dim = strat.strata_dims.back();
    strat.fiber_dims = fiber_dims;
    return strat;
}

int defect(const Stratification& strat) {
    int r = 0;
    for (int k = 0; k < strat.genus; ++k)
        r = std::max(r, 2 * strat.f(k) + strat.s(k) - strat.total_dim);
    return r;
}

}  // namespace ihsat
