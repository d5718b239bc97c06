#pragma once

#include <vector>

#include "ihsat/graded_table.hpp"

namespace ihsat {

// Kummer-invariant cohomology of the universal family of dimension g-1:
// at even p the full exterior-power decomposition of H^p, zero at odd p
// (the -1 involution kills odd degrees).  Degrees run up to min(g, 2(g-1)),
// one column past the link truncation bound so the d_2 targets exist.
GradedTable invariant_kummer_row(int g);

// IH^q of the corank-one link bundle N_{g-1,g} for q <= g-1, computed by
// running the two-row circle-bundle Leray sequence: the d_2 differential is
// of maximal rank, so it cancels termwise (sum_min).  The closed form
// (V[1^q] at even q, 0 at odd q) is the test oracle, not the implementation.
GradedTable circle_link_ih(int g);

// One first-quadrant page of a Gysin spectral sequence with compact-support
// entries carrying Tate twists, plus the differentials that are known to be
// of full rank.  Only forced differentials are ever cancelled: they are
// declared in the input data, never inferred.
struct GysinPage {
    struct Column {
        int p = 0;
        GradedTable entries;  // q -> IrrepSum, twists included
    };
    struct ForcedDifferential {
        int p = 0, q = 0;    // source (p, q), target (p+1, q)
        IrrepSum cancelled;  // must be present on both sides, twists matching
    };

    std::vector<Column> columns;
    std::vector<ForcedDifferential> differentials;
    int context_genus = 0;

    const Column* column(int p) const;
};

// Collapse the page by total degree n = p + q, removing both sides of each
// forced differential first.  Twist tags participate in the matching.
// Throws MismatchedDifferentialError if a cancelled term is absent on
// either side.
GradedTable gysin_assemble(const GysinPage& page);

}  // namespace ihsat
