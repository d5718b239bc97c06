#include "ihsat/spectral.hpp"

#include <algorithm>

#include "ihsat/errors.hpp"

namespace ihsat {

GradedTable invariant_kummer_row(int g) {
    if (g < 1) throw OutOfRangeError("invariant_kummer_row: genus must be >= 1");
    const int fiber_genus = g - 1;
    GradedTable row(fiber_genus);
    const int top = std::min(g, 2 * fiber_genus);
    for (int p = 0; p <= top; p += 2) row.set(p, exterior_power_decomposition(fiber_genus, p));
    return row;
}

GradedTable circle_link_ih(int g) {
    if (g < 1) throw OutOfRangeError("circle_link_ih: genus must be >= 1");
    const GradedTable base = invariant_kummer_row(g);
    // Two identical rows q = 0, 1; d_2 maps (p, 1) -> (p+2, 0) with maximal
    // rank, i.e. it cancels min(source, target) termwise.
    const int top = std::max(base.max_degree(), 0);
    std::vector<IrrepSum> e3_bottom(static_cast<std::size_t>(top) + 1);
    std::vector<IrrepSum> e3_top(static_cast<std::size_t>(top) + 1);
    for (int p = 0; p <= top; ++p) {
        e3_bottom[static_cast<std::size_t>(p)] = base.at(p);
        e3_top[static_cast<std::size_t>(p)] = base.at(p);
    }
    for (int p = 0; p + 2 <= top; ++p) {
        IrrepSum cancelled = IrrepSum::min(e3_top[static_cast<std::size_t>(p)],
                                           e3_bottom[static_cast<std::size_t>(p) + 2]);
        e3_top[static_cast<std::size_t>(p)] =
            e3_top[static_cast<std::size_t>(p)].subtract(cancelled);
        e3_bottom[static_cast<std::size_t>(p) + 2] =
            e3_bottom[static_cast<std::size_t>(p) + 2].subtract(cancelled);
    }
    GradedTable out(g - 1, g - 1);
    for (int q = 0; q <= g - 1; ++q) {
        IrrepSum total;
        if (q <= top) total.add(e3_bottom[static_cast<std::size_t>(q)]);
        if (q >= 1 && q - 1 <= top) total.add(e3_top[static_cast<std::size_t>(q) - 1]);
        out.set(q, std::move(total));
    }
    return out;
}

const GysinPage::Column* GysinPage::column(int p) const {
    for (const auto& col : columns)
        if (col.p == p) return &col;
    return nullptr;
}

GradedTable gysin_assemble(const GysinPage& page) {
    // Work on a mutable copy of the entry grid so forced differentials can
    // remove their two sides before the total-degree collapse.
    std::map<std::pair<int, int>, IrrepSum> grid;
    for (const auto& col : page.columns)
        for (const auto& [q, value] : col.entries.entries()) grid[{col.p, q}] = value;

    for (const auto& d : page.differentials) {
        auto src = grid.find({d.p, d.q});
        auto dst = grid.find({d.p + 1, d.q});
        const char* missing = nullptr;
        if (src == grid.end()) missing = "source";
        if (dst == grid.end()) missing = "target";
        if (missing)
            throw MismatchedDifferentialError(
                "forced differential (" + std::to_string(d.p) + "," + std::to_string(d.q) +
                ")->(" + std::to_string(d.p + 1) + "," + std::to_string(d.q) + "): " + missing +
                " entry is absent");
        try {
            src->second = src->second.subtract(d.cancelled);
            dst->second = dst->second.subtract(d.cancelled);
        } catch (const NegativeMultiplicityError& e) {
            throw MismatchedDifferentialError(
                "forced differential (" + std::to_string(d.p) + "," + std::to_string(d.q) +
                ")->(" + std::to_string(d.p + 1) + "," + std::to_string(d.q) +
                ") cancels " + d.cancelled.to_string() + ", which does not match: " + e.what());
        }
    }

    GradedTable out(page.context_genus);
    for (const auto& [pq, value] : grid) out.add(pq.first + pq.second, value);
    return out;
}

}  // namespace ihsat
