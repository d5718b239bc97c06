#pragma once

#include <string>
#include <vector>

namespace ihsat {

// One degree of a Betti table whose value may be open: either an exact
// dimension, a lower bound (rendered ">= b"), or fully unknown.
struct BettiEntry {
    enum class Kind { Known, Bounded, Unknown };

    Kind kind = Kind::Known;
    long long value = 0;  // exact dimension or lower bound; ignored when Unknown

    static BettiEntry known(long long v) { return {Kind::Known, v}; }
    static BettiEntry bounded(long long v) { return {Kind::Bounded, v}; }
    static BettiEntry unknown() { return {Kind::Unknown, 0}; }

    bool is_known() const { return kind == Kind::Known; }

    // Entry arithmetic for the blow-up split: exact values stay exact,
    // bounds shift with the known offset, unknown absorbs everything.
    BettiEntry plus(long long v) const;
    BettiEntry minus(long long v) const;  // NegativeMultiplicityError on exact underflow

    std::string to_string() const;  // "5", ">=16", "?"

    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

// A degree-indexed row of intersection Betti numbers with possible unknowns.
struct BettiTable {
    std::vector<BettiEntry> entries;  // index = cohomological degree

    static BettiTable zeros(int top_degree);

    int top() const { return static_cast<int>(entries.size()) - 1; }
    BettiEntry at(int degree) const;
    void set(int degree, BettiEntry e);

    std::vector<long long> known_row() const;  // throws if any entry is not exact
    std::string to_string() const;             // space-separated entries

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

}  // namespace ihsat
