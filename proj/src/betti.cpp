#include "ihsat/betti.hpp"

#include <sstream>

#include "ihsat/errors.hpp"

namespace ihsat {

BettiEntry BettiEntry::plus(long long v) const {
    switch (kind) {
        case Kind::Known:
            return known(value + v);
        case Kind::Bounded:
            return bounded(value + v);
        default:
            return unknown();
    }
}

BettiEntry BettiEntry::minus(long long v) const {
    switch (kind) {
        case Kind::Known:
            if (value < v)
                throw NegativeMultiplicityError("Betti entry " + std::to_string(value) +
                                                " - " + std::to_string(v) + " goes negative");
            return known(value - v);
        case Kind::Bounded:
            return bounded(value > v ? value - v : 0);
        default:
            return unknown();
    }
}

std::string BettiEntry::to_string() const {
    switch (kind) {
        case Kind::Known:
            return std::to_string(value);
        case Kind::Bounded:
            return ">=" + std::to_string(value);
        default:
            return "?";
    }
}

BettiTable BettiTable::zeros(int top_degree) {
    BettiTable t;
    t.entries.assign(static_cast<std::size_t>(top_degree) + 1, BettiEntry::known(0));
    return t;
}

BettiEntry BettiTable::at(int degree) const {
    if (degree < 0 || degree > top()) return BettiEntry::known(0);
    return entries[static_cast<std::size_t>(degree)];
}

void BettiTable::set(int degree, BettiEntry e) {
    if (degree < 0) throw OutOfRangeError("negative degree in Betti table");
    if (degree > top()) entries.resize(static_cast<std::size_t>(degree) + 1, BettiEntry::known(0));
    entries[static_cast<std::size_t>(degree)] = e;
}

std::vector<long long> BettiTable::known_row() const {
    std::vector<long long> row;
    row.reserve(entries.size());
    for (const auto& e : entries) {
        if (!e.is_known()) throw Error("Betti table has open entries, no exact row available");
        row.push_back(e.value);
    }
    return row;
}

std::string BettiTable::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) os << " ";
        os << entries[i].to_string();
    }
    return os.str();
}

}  // namespace ihsat
