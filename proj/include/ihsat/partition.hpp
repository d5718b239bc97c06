#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ihsat {

// A Young diagram labeling an irreducible local system of the rank-g
// symplectic group.  Stored zero-normalized: parts are weakly decreasing and
// strictly positive, so the empty partition is the trivial system Q.  The
// ambient genus is context (it lives on the table, not on the term): the same
// symbol can denote local systems on different strata.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // must already be normalized

    // Strip trailing zeros, validate monotonicity and the row bound.
    // Throws NonMonotoneError / TooManyRowsError.
    static Partition normalized(const std::vector<int>& raw, int ambient_genus);

    // The column partition (1,1,...,1) with q ones; q = 0 gives Q.
    static Partition column(int q);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool is_trivial() const { return parts_.empty(); }
    int weight() const;  // sum of the parts

    bool fits_genus(int ambient_genus) const { return rows() <= ambient_genus; }

    // "Q" for the empty partition, "V[a1,a2,...]" otherwise.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Display order: heavier first, then lexicographically larger first,
    // so V[2] sorts before V[1,1] and Q comes last.
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;
};

// Dimension of the irreducible representation of Sp(2g) with highest weight
// p, by the type-C Weyl dimension formula in exact integer arithmetic.
// p must fit into g rows.
std::uint64_t weyl_dimension(const Partition& p, int ambient_genus);

}  // namespace ihsat
