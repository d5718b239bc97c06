#include "ihsat/irrep_sum.hpp"

#include <algorithm>
#include <sstream>

#include "ihsat/errors.hpp"

namespace ihsat {

IrrepSum IrrepSum::trivial(long long mult) { return single(Partition(), mult); }

IrrepSum IrrepSum::single(const Partition& p, long long mult, std::optional<int> twist) {
    IrrepSum s;
    s.add(p, mult, twist);
    return s;
}

bool IrrepSum::has_twists() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.second.has_value(); });
}

void IrrepSum::add(const Partition& p, long long mult, std::optional<int> twist) {
    if (mult == 0) return;
    if (mult < 0) throw NegativeMultiplicityError("cannot add a negative multiple of " + p.to_string());
    terms_[{p, twist}] += mult;
}

void IrrepSum::add(const IrrepSum& other) {
    for (const auto& [key, mult] : other.terms_) terms_[key] += mult;
}

IrrepSum IrrepSum::subtract(const IrrepSum& other) const {
    IrrepSum out = *this;
    for (const auto& [key, mult] : other.terms_) {
        auto it = out.terms_.find(key);
        long long have = it == out.terms_.end() ? 0 : it->second;
        if (have < mult)
            throw NegativeMultiplicityError(
                "subtraction goes negative at " + key.first.to_string() + ": " +
                std::to_string(have) + " - " + std::to_string(mult));
        if (have == mult)
            out.terms_.erase(it);
        else
            it->second = have - mult;
    }
    return out;
}

IrrepSum IrrepSum::min(const IrrepSum& a, const IrrepSum& b) {
    IrrepSum out;
    for (const auto& [key, mult] : a.terms_) {
        auto it = b.terms_.find(key);
        if (it == b.terms_.end()) continue;
        out.terms_[key] = std::min(mult, it->second);
    }
    return out;
}

IrrepSum IrrepSum::dual() const {
    IrrepSum out;
    for (const auto& [key, mult] : terms_) {
        std::optional<int> twist = key.second;
        if (twist) twist = -*twist;
        out.terms_[{key.first, twist}] += mult;
    }
    return out;
}

IrrepSum IrrepSum::without_twists() const {
    IrrepSum out;
    for (const auto& [key, mult] : terms_) out.terms_[{key.first, std::nullopt}] += mult;
    return out;
}

long long IrrepSum::multiplicity(const Partition& p, std::optional<int> twist) const {
    auto it = terms_.find({p, twist});
    return it == terms_.end() ? 0 : it->second;
}

long long IrrepSum::multiplicity_any_twist(const Partition& p) const {
    long long total = 0;
    for (const auto& [key, mult] : terms_)
        if (key.first == p) total += mult;
    return total;
}

std::uint64_t IrrepSum::total_dimension(int ambient_genus) const {
    std::uint64_t total = 0;
    for (const auto& [key, mult] : terms_)
        total += static_cast<std::uint64_t>(mult) * weyl_dimension(key.first, ambient_genus);
    return total;
}

int IrrepSum::max_rows() const {
    int rows = 0;
    for (const auto& [key, mult] : terms_) rows = std::max(rows, key.first.rows());
    return rows;
}

bool IrrepSum::equals(const IrrepSum& other) const {
    if (has_twists() && other.has_twists()) return terms_ == other.terms_;
    return without_twists().terms_ == other.without_twists().terms_;
}

IrrepSum operator*(long long m, const IrrepSum& a) {
    if (m < 0) throw NegativeMultiplicityError("cannot scale by a negative integer");
    IrrepSum out;
    if (m == 0) return out;
    for (const auto& [key, mult] : a.terms_) out.terms_[key] = m * mult;
    return out;
}

std::string IrrepSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, mult] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (mult != 1) os << mult << " ";
        os << key.first.to_string();
        if (key.second) os << "(" << *key.second << ")";
    }
    return os.str();
}

IrrepSum exterior_power_decomposition(int g, int q) {
    if (g < 0) throw OutOfRangeError("exterior power: negative genus");
    if (q < 0 || q > 2 * g)
        throw OutOfRangeError("exterior power degree " + std::to_string(q) +
                              " outside [0, " + std::to_string(2 * g) + "]");
    if (q > g) q = 2 * g - q;  // self-duality
    IrrepSum out;
    for (int k = q; k >= 0; k -= 2) out.add(Partition::column(k), 1);
    return out;
}

}  // namespace ihsat
