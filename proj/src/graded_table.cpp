#include "ihsat/graded_table.hpp"

#include <algorithm>

#include "ihsat/errors.hpp"

namespace ihsat {

namespace {
const IrrepSum kZero;
}

void GradedTable::set(int degree, IrrepSum value) {
    if (degree < 0) throw OutOfRangeError("negative degree in graded table");
    if (top_degree_ && degree > *top_degree_)
        throw OutOfRangeError("degree " + std::to_string(degree) + " exceeds top degree " +
                              std::to_string(*top_degree_));
    if (value.is_zero())
        entries_.erase(degree);
    else
        entries_[degree] = std::move(value);
}

void GradedTable::add(int degree, const IrrepSum& value) {
    if (value.is_zero()) return;
    IrrepSum current = at(degree);
    current.add(value);
    set(degree, std::move(current));
}

const IrrepSum& GradedTable::at(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? kZero : it->second;
}

int GradedTable::max_degree() const {
    return entries_.empty() ? -1 : entries_.rbegin()->first;
}

std::vector<std::uint64_t> GradedTable::dimension_row() const {
    int top = std::max(max_degree(), top_degree_.value_or(-1));
    std::vector<std::uint64_t> row(static_cast<std::size_t>(top + 1), 0);
    for (const auto& [degree, value] : entries_)
        row[static_cast<std::size_t>(degree)] = value.total_dimension(context_genus_);
    return row;
}

bool GradedTable::equals(const GradedTable& other) const {
    int top = std::max(max_degree(), other.max_degree());
    for (int d = 0; d <= top; ++d)
        if (!at(d).equals(other.at(d))) return false;
    return true;
}

}  // namespace ihsat
