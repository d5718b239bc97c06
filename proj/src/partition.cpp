#include "ihsat/partition.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <sstream>

#include "ihsat/errors.hpp"

namespace ihsat {

using boost::multiprecision::cpp_int;

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {}

Partition Partition::normalized(const std::vector<int>& raw, int ambient_genus) {
    std::vector<int> parts;
    parts.reserve(raw.size());
    for (int v : raw) {
        if (v != 0) parts.push_back(v);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw NonMonotoneError("partition parts must be non-negative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw NonMonotoneError("partition parts must be weakly decreasing");
    }
    // Zeros may only trail, so dropping them must not reorder anything.
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        if (raw[i] < raw[i + 1]) throw NonMonotoneError("partition parts must be weakly decreasing");
    }
    if (static_cast<int>(parts.size()) > ambient_genus)
        throw TooManyRowsError("partition has " + std::to_string(parts.size()) +
                               " rows, ambient genus is " + std::to_string(ambient_genus));
    return Partition(std::move(parts));
}

Partition Partition::column(int q) {
    return Partition(std::vector<int>(static_cast<std::size_t>(q), 1));
}

int Partition::weight() const {
    int w = 0;
    for (int v : parts_) w += v;
    return w;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "Q";
    std::ostringstream os;
    os << "V[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (int w = weight(), wo = other.weight(); w != wo)
        return wo <=> w;  // heavier first
    const auto& a = parts_;
    const auto& b = other.parts_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return b[i] <=> a[i];  // larger leading part first
    }
    return a.size() <=> b.size();
}

std::uint64_t weyl_dimension(const Partition& p, int ambient_genus) {
    const int g = ambient_genus;
    if (!p.fits_genus(g))
        throw TooManyRowsError("partition " + p.to_string() + " does not fit genus " +
                               std::to_string(g));
    // l_i = lambda_i + g - i, m_i = g - i (1-based i, rho = (g, g-1, ..., 1)).
    std::vector<long long> l(g), m(g);
    for (int i = 0; i < g; ++i) {
        long long lam = i < p.rows() ? p.parts()[i] : 0;
        l[i] = lam + g - i;
        m[i] = g - i;
    }
    cpp_int num = 1, den = 1;
    for (int i = 0; i < g; ++i) {
        num *= l[i];
        den *= m[i];
        for (int j = i + 1; j < g; ++j) {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (m[i] - m[j]) * (m[i] + m[j]);
        }
    }
    cpp_int dim = num / den;
    if (dim * den != num) throw Error("weyl_dimension: non-integral quotient (bug)");
    if (dim > std::numeric_limits<std::uint64_t>::max())
        throw Error("weyl_dimension: result exceeds 64 bits");
    return static_cast<std::uint64_t>(dim);
}

}  // namespace ihsat
