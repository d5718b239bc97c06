#include "ihsat/links.hpp"

#include <sstream>

#include "ihsat/errors.hpp"

namespace ihsat {

namespace {
int triangular(int k) { return k * (k + 1) / 2; }
}

int LinkKey::real_dimension() const { return 2 * (triangular(upper) - triangular(lower)) - 1; }

std::string LinkKey::to_string() const {
    return "N_{" + std::to_string(lower) + "," + std::to_string(upper) + "}," + coeff.to_string();
}

std::strong_ordering LinkKey::operator<=>(const LinkKey& other) const {
    // Q-coefficient links first, then the nontrivial coefficients; within a
    // block order by upper stratum, then lower, matching the report layout.
    if (auto c = (coeff.is_trivial() ? 0 : 1) <=> (other.coeff.is_trivial() ? 0 : 1); c != 0) return c;
    if (auto c = upper <=> other.upper; c != 0) return c;
    if (auto c = lower <=> other.lower; c != 0) return c;
    return coeff <=> other.coeff;
}

std::string LinkSymbol::to_string() const {
    return "IH" + std::to_string(degree) + "(" + key.to_string() + ")";
}

std::strong_ordering LinkSymbol::operator<=>(const LinkSymbol& other) const {
    if (auto c = key <=> other.key; c != 0) return c;
    return degree <=> other.degree;
}

std::string Constraint::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [symbol, coeff] : unknowns) {
        if (!first) os << " + ";
        first = false;
        if (coeff != 1) os << coeff << " ";
        os << symbol.to_string();
    }
    if (first) os << "0";
    os << " = " << rhs.to_string();
    return os.str();
}

std::optional<IrrepSum> LinkStore::lookup(const LinkKey& key, int degree) const {
    auto row = known_.find(key);
    if (row == known_.end()) return std::nullopt;
    auto it = row->second.find(degree);
    if (it == row->second.end()) return std::nullopt;
    return it->second;
}

bool LinkStore::is_known(const LinkKey& key, int degree) const {
    return lookup(key, degree).has_value();
}

void LinkStore::set(const LinkKey& key, int degree, const IrrepSum& value) {
    if (degree < 0 || degree > key.real_dimension())
        throw OutOfRangeError("link degree " + std::to_string(degree) + " outside [0, " +
                              std::to_string(key.real_dimension()) + "] for " + key.to_string());
    auto store_one = [&](int q, const IrrepSum& v) {
        auto& row = known_[key];
        auto it = row.find(q);
        if (it != row.end()) {
            if (!it->second.equals(v))
                throw ContradictionError("IH" + std::to_string(q) + "(" + key.to_string() +
                                         ") already equals " + it->second.to_string() +
                                         ", cannot set to " + v.to_string());
            return;
        }
        row[q] = v;
    };
    store_one(degree, value);
    store_one(key.real_dimension() - degree, value.dual());
}

void LinkStore::mark_symbolic(const LinkKey& key) { symbolic_keys_.insert(key); }

std::vector<Constraint> resolve_links(const std::vector<Constraint>& constraints, LinkStore& links) {
    std::vector<Constraint> pending = constraints;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Constraint> next;
        for (Constraint c : pending) {
            // Substitute everything already known.
            std::vector<std::pair<LinkSymbol, long long>> open;
            for (const auto& [symbol, coeff] : c.unknowns) {
                if (auto value = links.lookup(symbol.key, symbol.degree)) {
                    try {
                        c.rhs = c.rhs.subtract(coeff * *value);
                    } catch (const NegativeMultiplicityError& e) {
                        throw NegativeMultiplicityError(
                            "constraint at stratum " + std::to_string(c.stratum) + ", degree " +
                            std::to_string(c.degree) + ": substituting " + symbol.to_string() +
                            " = " + value->to_string() + ": " + e.what());
                    }
                    changed = true;
                } else {
                    open.push_back({symbol, coeff});
                }
            }
            c.unknowns = std::move(open);

            if (c.unknowns.empty()) {
                if (!c.rhs.is_zero())
                    throw ContradictionError("constraint at stratum " + std::to_string(c.stratum) +
                                             ", degree " + std::to_string(c.degree) +
                                             " fully substituted but " + c.rhs.to_string() +
                                             " remains unaccounted");
                changed = true;
                continue;  // satisfied, drop it
            }
            if (c.rhs.is_zero()) {
                // Non-negative multiplicities: a zero total forces each term to zero.
                for (const auto& [symbol, coeff] : c.unknowns) links.set(symbol, IrrepSum::zero());
                changed = true;
                continue;
            }
            if (c.unknowns.size() == 1) {
                const auto& [symbol, coeff] = c.unknowns.front();
                IrrepSum value;
                for (const auto& [key, mult] : c.rhs.terms()) {
                    if (mult % coeff != 0)
                        throw ContradictionError("constraint at stratum " + std::to_string(c.stratum) +
                                                 ", degree " + std::to_string(c.degree) + ": " +
                                                 c.rhs.to_string() + " is not divisible by " +
                                                 std::to_string(coeff));
                    value.add(key.first, mult / coeff, key.second);
                }
                links.set(symbol, value);
                changed = true;
                continue;
            }
            next.push_back(std::move(c));
        }
        pending = std::move(next);
    }
    return pending;
}

}  // namespace ihsat
