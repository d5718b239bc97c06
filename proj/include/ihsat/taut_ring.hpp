#pragma once

#include <set>
#include <string>
#include <vector>

namespace ihsat {

// The tautological ring R_g = Q[lambda_1, ..., lambda_g] modulo its single
// relation has a vector-space basis of 2^g square-free monomials; only the
// graded dimensions and the complement pairing are needed here.

struct TautBasisElement {
    std::set<int> subset;  // which lambda_i appear, i in {1..g}
    int degree = 0;        // 2 * (sum of the subset), cohomological units
};

struct GradedDims {
    std::vector<long long> dims;  // indexed by cohomological degree 0..g(g+1)

    long long at(int j) const {
        return (j < 0 || j >= static_cast<int>(dims.size())) ? 0 : dims[static_cast<std::size_t>(j)];
    }
    int top() const { return static_cast<int>(dims.size()) - 1; }
};

// All 2^g subsets of {1..g} with their degrees, ordered by bitmask.
std::vector<TautBasisElement> taut_basis(int g);

// dims[j] = #{S subset of {1..g} : 2 * sum(S) = j}, j = 0..g(g+1).
GradedDims taut_graded_dims(int g);

struct PairingReport {
    bool pass = true;
    std::vector<std::string> failures;  // one line per violated degree/pair
};

// Verifies that S -> complement(S) is a degree-complementing bijection on
// taut_basis(g), i.e. degree(S) + degree(S^c) = g(g+1), and that the graded
// dimensions are symmetric.  Failure indicates an implementation bug and is
// reported, never thrown.
PairingReport pairing_check(int g);

}  // namespace ihsat
