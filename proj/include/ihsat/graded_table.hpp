#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ihsat/irrep_sum.hpp"

namespace ihsat {

// A map degree -> IrrepSum: one displayed cohomology row or column (fiber
// cohomology H*(F), link cohomology IH*(N), Betti tables).  Missing degrees
// are zero; stored entries are nonzero.
class GradedTable {
public:
    GradedTable() = default;
    explicit GradedTable(int context_genus, std::optional<int> top_degree = std::nullopt)
        : context_genus_(context_genus), top_degree_(top_degree) {}

    int context_genus() const { return context_genus_; }
    std::optional<int> top_degree() const { return top_degree_; }

    void set(int degree, IrrepSum value);
    void add(int degree, const IrrepSum& value);
    const IrrepSum& at(int degree) const;  // zero for absent degrees
    bool is_zero() const { return entries_.empty(); }
    int max_degree() const;  // -1 when empty

    const std::map<int, IrrepSum>& entries() const { return entries_; }

    // Dimensions per degree, 0..max(top_degree, max_degree).
    std::vector<std::uint64_t> dimension_row() const;

    bool equals(const GradedTable& other) const;  // degreewise IrrepSum::equals
    friend bool operator==(const GradedTable& a, const GradedTable& b) { return a.equals(b); }

private:
    std::map<int, IrrepSum> entries_;
    int context_genus_ = 0;
    std::optional<int> top_degree_;
};

}  // namespace ihsat
