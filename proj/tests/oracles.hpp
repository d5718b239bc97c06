#pragma once

// Test-only oracles, independent of the library's implementation paths.

#include <algorithm>
#include <utility>
#include <vector>

#include "ihsat/partition.hpp"

namespace ihsat::oracles {

// Dimension of the Sp(2g) irreducible with highest weight `shape`, counted
// as the number of symplectic (King) tableaux: entries from the ordered
// alphabet 1 < 1' < 2 < 2' < ... < g < g' (encoded as ranks 1..2g, even rank
// = primed), rows weakly increasing, columns strictly increasing, and every
// entry in row i at least the unprimed letter i (rank >= 2i - 1).
inline long long king_dimension(const std::vector<int>& shape, int g) {
    if (shape.empty()) return 1;
    const int rows = static_cast<int>(shape.size());
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        cells[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(r)]), 0);

    long long count = 0;
    // Fill row-major with backtracking.
    std::vector<std::pair<int, int>> order;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) order.push_back({r, c});

    std::vector<int> values(order.size(), 0);
    std::size_t pos = 0;
    while (true) {
        if (pos == order.size()) {
            ++count;
            --pos;
            continue;
        }
        auto [r, c] = order[pos];
        int minimum = 2 * (r + 1) - 1;  // King condition for row r (1-based r+1)
        if (c > 0) minimum = std::max(minimum, values[pos - 1]);  // row weakly increases
        if (r > 0) {
            // strictly increasing down the column: find the cell above
            std::size_t above = 0;
            for (std::size_t i = 0; i < pos; ++i)
                if (order[i].first == r - 1 && order[i].second == c) above = i;
            minimum = std::max(minimum, values[above] + 1);
        }
        int next = values[pos] == 0 ? minimum : values[pos] + 1;
        if (next > 2 * g) {
            values[pos] = 0;
            if (pos == 0) break;
            --pos;
            continue;
        }
        values[pos] = next;
        ++pos;
        if (pos < values.size()) values[pos] = 0;
    }
    return count;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

// Coefficients of prod_{i=1..g} (1 + t^(2i)).
inline std::vector<long long> square_free_poly(int g) {
    std::vector<long long> poly{1};
    for (int i = 1; i <= g; ++i) {
        std::vector<long long> next(poly.size() + static_cast<std::size_t>(2 * i), 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d];
            next[d + static_cast<std::size_t>(2 * i)] += poly[d];
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace ihsat::oracles
