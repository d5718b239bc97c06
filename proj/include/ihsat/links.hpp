#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ihsat/irrep_sum.hpp"

namespace ihsat {

// Identifies the link bundle N_{lower,upper} of the rank-'lower' stratum
// inside the closure of the rank-'upper' one, with coefficients in the local
// system labeled by 'coeff' (the empty partition is Q).
struct LinkKey {
    int lower = 0;
    int upper = 0;
    Partition coeff;

    // Real dimension of the link: 2(s_upper - s_lower) - 1.
    int real_dimension() const;

    std::string to_string() const;  // "N_{1,3},V[1,1]"

    friend bool operator==(const LinkKey&, const LinkKey&) = default;
    std::strong_ordering operator<=>(const LinkKey& other) const;
};

// One intersection-cohomology group of a link: IH^degree(N_{k,r}, G).
struct LinkSymbol {
    LinkKey key;
    int degree = 0;

    std::string to_string() const;  // "IH2(N_{1,3},V[1,1])"

    friend bool operator==(const LinkSymbol&, const LinkSymbol&) = default;
    std::strong_ordering operator<=>(const LinkSymbol& other) const;
};

// A linear identity among unknown link groups with a known right-hand side,
// e.g. IH4(N_{2,4},Q) + IH0(N_{2,3},V[1,1]) = V[2,2].  Symbols are distinct;
// coefficients are positive.
struct Constraint {
    std::vector<std::pair<LinkSymbol, long long>> unknowns;
    IrrepSum rhs;
    int stratum = 0;  // where the identity was derived
    int degree = 0;   // fiber degree it came from

    std::string to_string() const;
};

// Known link cohomology plus the set of links whose groups were ever left
// symbolic.  Values are completed under Poincare duality of the link
// (q <-> real_dimension - q) as they are learned.
class LinkStore {
public:
    std::optional<IrrepSum> lookup(const LinkKey& key, int degree) const;
    bool is_known(const LinkKey& key, int degree) const;

    // Record a value (and its duality mirror).  Throws ContradictionError if
    // the symbol already holds a different value.
    void set(const LinkKey& key, int degree, const IrrepSum& value);
    void set(const LinkSymbol& symbol, const IrrepSum& value) { set(symbol.key, symbol.degree, value); }

    // Remember that a symbol for this link was minted; such links form the
    // rows of the link report.
    void mark_symbolic(const LinkKey& key);
    const std::set<LinkKey>& symbolic_keys() const { return symbolic_keys_; }

    const std::map<LinkKey, std::map<int, IrrepSum>>& known() const { return known_; }

private:
    std::map<LinkKey, std::map<int, IrrepSum>> known_;
    std::set<LinkKey> symbolic_keys_;
};

// Substitute known symbols into the constraints and iterate to a fixpoint:
// a right-hand side of zero forces every symbol in it to zero, a single
// remaining symbol becomes known.  Multi-symbol constraints that survive are
// returned for the report.  Throws ContradictionError / NegativeMultiplicityError
// on inconsistent input.
std::vector<Constraint> resolve_links(const std::vector<Constraint>& constraints, LinkStore& links);

}  // namespace ihsat
