#include "ihsat/taut_ring.hpp"

#include "ihsat/errors.hpp"

namespace ihsat {

std::vector<TautBasisElement> taut_basis(int g) {
    if (g < 1) throw OutOfRangeError("taut_basis: genus must be >= 1");
    if (g > 30) throw OutOfRangeError("taut_basis: genus too large to enumerate");
    std::vector<TautBasisElement> basis;
    basis.reserve(1u << g);
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
        TautBasisElement e;
        for (int i = 1; i <= g; ++i) {
            if (mask & (1u << (i - 1))) {
                e.subset.insert(i);
                e.degree += 2 * i;
            }
        }
        basis.push_back(std::move(e));
    }
    return basis;
}

GradedDims taut_graded_dims(int g) {
    if (g < 1) throw OutOfRangeError("taut_graded_dims: genus must be >= 1");
    if (g > 24) throw OutOfRangeError("taut_graded_dims: genus too large to enumerate");
    GradedDims out;
    out.dims.assign(static_cast<std::size_t>(g * (g + 1)) + 1, 0);
    // Count subsets of {1..g} by doubled sum.  Incremental: the doubled sum
    // of a mask is the doubled sum with its lowest bit cleared, plus twice
    // that bit's generator index.
    std::vector<int> doubled(1u << g, 0);
    for (unsigned mask = 1; mask < (1u << g); ++mask) {
        int lowest = __builtin_ctz(mask);
        doubled[mask] = doubled[mask & (mask - 1)] + 2 * (lowest + 1);
    }
    for (unsigned mask = 0; mask < (1u << g); ++mask)
        ++out.dims[static_cast<std::size_t>(doubled[mask])];
    return out;
}

PairingReport pairing_check(int g) {
    PairingReport report;
    const int socle = g * (g + 1);
    const auto dims = taut_graded_dims(g);
    const unsigned full = (1u << g) - 1;
    // Degree of a subset mask, complement pairing.
    auto degree_of = [&](unsigned mask) {
        int d = 0;
        for (int i = 1; i <= g; ++i)
            if (mask & (1u << (i - 1))) d += 2 * i;
        return d;
    };
    for (unsigned mask = 0; mask <= full; ++mask) {
        int d = degree_of(mask);
        int dc = degree_of(full & ~mask);
        if (d + dc != socle) {
            report.pass = false;
            report.failures.push_back("subset mask " + std::to_string(mask) +
                                      " pairs to degree " + std::to_string(d + dc) +
                                      ", expected " + std::to_string(socle));
        }
    }
    for (int j = 0; j <= socle; ++j) {
        if (dims.at(j) != dims.at(socle - j)) {
            report.pass = false;
            report.failures.push_back("dims asymmetric at degree " + std::to_string(j));
        }
    }
    return report;
}

}  // namespace ihsat
