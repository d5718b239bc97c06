#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ihsat/partition.hpp"

namespace ihsat {

// A formal non-negative-integer combination of irreducible symplectic local
// systems, optionally tagged with Tate twists.  This is the unit of all
// cohomology bookkeeping: a table entry like V[2,2] + V[1,1] + 2 Q is one
// IrrepSum.  The empty sum is the zero system.
//
// Twist tags are metadata.  Arithmetic is keyed by (partition, twist);
// equality is twist-sensitive only when both operands carry twists,
// otherwise twists are ignored.
class IrrepSum {
public:
    using Key = std::pair<Partition, std::optional<int>>;
    using Terms = std::map<Key, long long>;  // multiplicities > 0

    IrrepSum() = default;

    static IrrepSum zero() { return IrrepSum(); }
    static IrrepSum trivial(long long mult = 1);  // mult * Q
    static IrrepSum single(const Partition& p, long long mult = 1,
                           std::optional<int> twist = std::nullopt);

    bool is_zero() const { return terms_.empty(); }
    bool has_twists() const;
    const Terms& terms() const { return terms_; }

    void add(const Partition& p, long long mult, std::optional<int> twist = std::nullopt);
    void add(const IrrepSum& other);

    // Termwise difference; throws NegativeMultiplicityError unless other <= *this.
    IrrepSum subtract(const IrrepSum& other) const;

    // Termwise minimum of multiplicities per (partition, twist).
    static IrrepSum min(const IrrepSum& a, const IrrepSum& b);

    // Partitions unchanged, twists negated.  An involution.
    IrrepSum dual() const;

    // Collapse twist tags, merging terms that differ only by twist.
    IrrepSum without_twists() const;

    long long multiplicity(const Partition& p, std::optional<int> twist) const;
    long long multiplicity_any_twist(const Partition& p) const;

    // Sum of multiplicity * weyl_dimension over all terms.
    std::uint64_t total_dimension(int ambient_genus) const;
    int max_rows() const;  // widest partition, for genus validation

    bool equals(const IrrepSum& other) const;

    // "V[2,2] + V[1,1] + 2 Q", "Q(-3)", "0" for the zero sum.
    std::string to_string() const;

    friend IrrepSum operator+(IrrepSum a, const IrrepSum& b) {
        a.add(b);
        return a;
    }
    friend IrrepSum operator-(const IrrepSum& a, const IrrepSum& b) { return a.subtract(b); }
    friend IrrepSum operator*(long long m, const IrrepSum& a);
    friend bool operator==(const IrrepSum& a, const IrrepSum& b) { return a.equals(b); }

private:
    Terms terms_;
};

// Decomposition of the q-th exterior power of the standard rank-2g system:
// V[1^q] + V[1^(q-2)] + ... down to parity, for 0 <= q <= g; the range
// g < q <= 2g is given by self-duality as the value at 2g - q.
// Throws OutOfRangeError outside [0, 2g].
IrrepSum exterior_power_decomposition(int g, int q);

}  // namespace ihsat
