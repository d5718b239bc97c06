#include "ihsat/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ihsat/errors.hpp"

namespace ihsat {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

// Minimal cursor over one physical line.
struct Scan {
    const std::string& s;
    std::size_t i = 0;
    int line;

    explicit Scan(const std::string& text, int line_no) : s(text), line(line_no) {}

    void skip_ws() {
        while (i < s.size() && is_space(s[i])) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(line, std::string("expected '") + c + "'");
    }
    long long integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw ParseError(line, "expected an integer");
        return std::stoll(s.substr(start, i - start));
    }
};

// term := [INT ('*' | ' ')] atom; atom := ('Q' | 'V[..]') ['(' INT ')'].
// A bare "0" denotes the zero sum.
IrrepSum parse_expr(const std::string& text, int line_no, int ambient_genus) {
    Scan sc(text, line_no);
    IrrepSum out;
    if (sc.peek() == '0') {
        ++sc.i;
        if (!sc.done()) throw ParseError(line_no, "unexpected text after zero entry");
        return out;
    }
    bool first = true;
    while (true) {
        if (!first) sc.expect('+');
        first = false;
        long long mult = 1;
        sc.skip_ws();
        if (sc.i < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.i]))) {
            mult = sc.integer();
            if (mult < 1) throw ParseError(line_no, "multiplicity must be positive");
            // Separator: '*' or at least one space before the atom.
            if (sc.i < sc.s.size() && sc.s[sc.i] == '*') {
                ++sc.i;
            } else if (sc.i < sc.s.size() && is_space(sc.s[sc.i])) {
                sc.skip_ws();
            } else {
                throw ParseError(line_no, "multiplicity must be followed by '*' or a space");
            }
        }
        Partition p;
        char c = sc.peek();
        if (c == 'Q') {
            ++sc.i;
        } else if (c == 'V') {
            ++sc.i;
            sc.expect('[');
            std::vector<int> raw;
            while (true) {
                long long v = sc.integer();
                raw.push_back(static_cast<int>(v));
                if (sc.accept(']')) break;
                sc.expect(',');
            }
            try {
                p = Partition::normalized(raw, ambient_genus);
            } catch (const TooManyRowsError& e) {
                throw GenusMismatchError(line_no, e.what());
            } catch (const NonMonotoneError& e) {
                throw ParseError(line_no, e.what());
            }
        } else {
            throw ParseError(line_no, "expected 'Q' or 'V[...]'");
        }
        std::optional<int> twist;
        if (sc.accept('(')) {
            twist = static_cast<int>(sc.integer());
            sc.expect(')');
        }
        out.add(p, mult, twist);
        if (sc.done()) break;
        if (sc.peek() != '+') throw ParseError(line_no, "expected '+' between terms");
    }
    return out;
}

}  // namespace

Partition parse_partition_literal(const std::string& text, int ambient_genus) {
    IrrepSum parsed = parse_expr(text, 0, ambient_genus);
    if (parsed.terms().size() != 1)
        throw ParseError(0, "expected a single partition literal, got '" + text + "'");
    const auto& [key, mult] = *parsed.terms().begin();
    if (mult != 1 || key.second)
        throw ParseError(0, "partition literals carry no multiplicity or twist: '" + text + "'");
    return key.first;
}

namespace {

std::map<std::string, std::string> parse_header_keys(const std::string& body, int line_no,
                                                     std::string& kind_out) {
    std::map<std::string, std::string> keys;
    std::size_t i = 0;
    auto next_token = [&]() -> std::string {
        while (i < body.size() && is_space(body[i])) ++i;
        if (i >= body.size()) return "";
        std::size_t start = i;
        std::string token;
        bool in_quotes = false;
        for (; i < body.size(); ++i) {
            char c = body[i];
            if (c == '"') {
                in_quotes = !in_quotes;
                continue;
            }
            if (!in_quotes && is_space(c)) break;
            token += c;
        }
        if (in_quotes) throw ParseError(line_no, "unterminated quote in section header");
        (void)start;
        return token;
    };
    kind_out = next_token();
    if (kind_out.empty()) throw ParseError(line_no, "empty section header");
    while (true) {
        std::string token = next_token();
        if (token.empty()) break;
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_no, "expected key=value in section header, got '" + token + "'");
        keys[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return keys;
}

DatasetSection::Kind kind_from_string(const std::string& s, int line_no) {
    if (s == "fiber") return DatasetSection::Kind::Fiber;
    if (s == "betti") return DatasetSection::Kind::Betti;
    if (s == "gysin") return DatasetSection::Kind::Gysin;
    if (s == "link-seed") return DatasetSection::Kind::LinkSeed;
    throw ParseError(line_no, "unknown section kind '" + s + "'");
}

std::string kind_to_string(DatasetSection::Kind k) {
    switch (k) {
        case DatasetSection::Kind::Fiber:
            return "fiber";
        case DatasetSection::Kind::Betti:
            return "betti";
        case DatasetSection::Kind::Gysin:
            return "gysin";
        default:
            return "link-seed";
    }
}

}  // namespace

std::string DatasetSection::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Fiber:
            os << "fiber g=" << keys.at("genus") << " k=" << keys.at("stratum");
            if (auto it = keys.find("piece"); it != keys.end()) os << " piece=" << it->second;
            break;
        case Kind::Betti:
            os << "betti " << keys.at("name");
            break;
        case Kind::Gysin:
            os << "gysin g=" << keys.at("genus") << " k=" << keys.at("stratum");
            break;
        case Kind::LinkSeed:
            os << "link-seed l=" << keys.at("lower") << " u=" << keys.at("upper") << " coeff="
               << keys.at("coeff");
            break;
    }
    return os.str();
}

int DatasetSection::ambient_genus() const {
    switch (kind) {
        case Kind::Fiber:
        case Kind::Gysin:
            return int_key("stratum");
        case Kind::LinkSeed:
            return int_key("lower");
        default:
            return 0;
    }
}

int DatasetSection::int_key(const std::string& key) const {
    auto it = keys.find(key);
    if (it == keys.end()) throw Error("dataset section is missing key '" + key + "'");
    return std::stoi(it->second);
}

std::optional<int> DatasetSection::opt_int_key(const std::string& key) const {
    auto it = keys.find(key);
    if (it == keys.end()) return std::nullopt;
    return std::stoi(it->second);
}

DatasetFile parse_dataset(const std::string& text) {
    DatasetFile file;
    DatasetSection* current = nullptr;
    std::set<int> seen_degrees;
    std::set<std::pair<int, int>> seen_cells;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, "unclosed section header");
            std::string kind_str;
            auto keys = parse_header_keys(line.substr(1, line.size() - 2), line_no, kind_str);
            DatasetSection section;
            section.kind = kind_from_string(kind_str, line_no);
            if (auto it = keys.find("note"); it != keys.end()) {
                section.note = it->second;
                keys.erase(it);
            }
            section.keys = std::move(keys);
            section.table = GradedTable(section.ambient_genus());
            section.page.context_genus = section.ambient_genus();
            file.sections.push_back(std::move(section));
            current = &file.sections.back();
            seen_degrees.clear();
            seen_cells.clear();
            continue;
        }
        if (!current) throw ParseError(line_no, "entry before any section header");

        if (current->kind == DatasetSection::Kind::Gysin) {
            Scan sc(line, line_no);
            bool is_differential = false;
            if (line.rfind("differential", 0) == 0) {
                is_differential = true;
                sc.i = std::string("differential").size();
            }
            sc.expect('(');
            int p = static_cast<int>(sc.integer());
            sc.expect(',');
            int q = static_cast<int>(sc.integer());
            sc.expect(')');
            if (is_differential) {
                sc.expect('-');
                sc.expect('>');
                sc.expect('(');
                int p2 = static_cast<int>(sc.integer());
                sc.expect(',');
                int q2 = static_cast<int>(sc.integer());
                sc.expect(')');
                if (p2 != p + 1 || q2 != q)
                    throw ParseError(line_no, "differential target must be (p+1,q)");
            }
            sc.expect(':');
            IrrepSum value =
                parse_expr(line.substr(sc.i), line_no, current->ambient_genus());
            if (is_differential) {
                current->page.differentials.push_back({p, q, std::move(value)});
            } else {
                if (!seen_cells.insert({p, q}).second)
                    throw DuplicateDegreeError(line_no, "cell (" + std::to_string(p) + "," +
                                                            std::to_string(q) + ") appears twice");
                auto& cols = current->page.columns;
                auto it = std::find_if(cols.begin(), cols.end(),
                                       [p](const auto& c) { return c.p == p; });
                if (it == cols.end()) {
                    cols.push_back({p, GradedTable(current->ambient_genus())});
                    std::sort(cols.begin(), cols.end(),
                              [](const auto& a, const auto& b) { return a.p < b.p; });
                    it = std::find_if(cols.begin(), cols.end(),
                                      [p](const auto& c) { return c.p == p; });
                }
                it->entries.set(q, std::move(value));
            }
            continue;
        }

        // fiber / betti / link-seed: "degree : body"
        Scan sc(line, line_no);
        int degree = static_cast<int>(sc.integer());
        if (degree < 0) throw ParseError(line_no, "negative degree");
        sc.expect(':');
        if (!seen_degrees.insert(degree).second)
            throw DuplicateDegreeError(line_no, "degree " + std::to_string(degree) + " appears twice");
        std::string body = trim(line.substr(sc.i));
        // Optional "; weight w" suffix, retained but unused.
        if (auto semi = body.find(';'); semi != std::string::npos) {
            std::string suffix = trim(body.substr(semi + 1));
            if (suffix.rfind("weight", 0) != 0)
                throw ParseError(line_no, "expected '; weight w' suffix");
            body = trim(body.substr(0, semi));
        }
        if (current->kind == DatasetSection::Kind::Betti) {
            if (body == "?") {
                current->unknown_degrees.push_back(degree);
                continue;
            }
            Scan vs(body, line_no);
            long long v = vs.integer();
            if (!vs.done()) throw ParseError(line_no, "betti entries are integers or '?'");
            if (v < 0) throw ParseError(line_no, "negative Betti number");
            if (v > 0) current->table.set(degree, IrrepSum::trivial(v));
            continue;
        }
        if (body == "?") throw ParseError(line_no, "'?' entries are only allowed in betti sections");
        current->table.set(degree, parse_expr(body, line_no, current->ambient_genus()));
    }
    return file;
}

std::string serialize_dataset(const DatasetFile& file) {
    std::ostringstream os;
    bool first_section = true;
    for (const auto& section : file.sections) {
        if (!first_section) os << "\n";
        first_section = false;
        os << "[" << kind_to_string(section.kind);
        // Stable key order: the structural keys first, everything else after.
        const char* preferred[] = {"genus",  "stratum", "piece", "column", "dim",
                                   "name",   "top",     "lower", "upper",  "coeff",
                                   "derived"};
        std::set<std::string> emitted;
        for (const char* key : preferred) {
            if (auto it = section.keys.find(key); it != section.keys.end()) {
                os << " " << key << "=" << it->second;
                emitted.insert(key);
            }
        }
        for (const auto& [key, value] : section.keys) {
            if (!emitted.count(key)) os << " " << key << "=" << value;
        }
        if (!section.note.empty()) os << " note=\"" << section.note << "\"";
        os << "]\n";

        if (section.kind == DatasetSection::Kind::Gysin) {
            for (const auto& col : section.page.columns)
                for (const auto& [q, value] : col.entries.entries())
                    os << "(" << col.p << "," << q << "): " << value.to_string() << "\n";
            for (const auto& d : section.page.differentials)
                os << "differential (" << d.p << "," << d.q << ")->(" << d.p + 1 << "," << d.q
                   << "): " << d.cancelled.to_string() << "\n";
            continue;
        }
        if (section.kind == DatasetSection::Kind::Betti) {
            std::map<int, std::string> rows;
            for (const auto& [degree, value] : section.table.entries())
                rows[degree] = std::to_string(value.multiplicity(Partition(), std::nullopt));
            for (int degree : section.unknown_degrees) rows[degree] = "?";
            for (const auto& [degree, text] : rows) os << degree << ": " << text << "\n";
            continue;
        }
        for (const auto& [degree, value] : section.table.entries())
            os << degree << ": " << value.to_string() << "\n";
    }
    return os.str();
}

DatasetRegistry DatasetRegistry::builtin() {
    extern const char* const kBuiltinDatasets;  // defined in builtin_data.cpp
    DatasetRegistry registry;
    DatasetFile file = parse_dataset(kBuiltinDatasets);
    for (const auto& section : file.sections) registry.put(section);
    return registry;
}

void DatasetRegistry::put(const DatasetSection& section) {
    if (section.kind == DatasetSection::Kind::Fiber && !section.keys.count("piece")) {
        // Corank-one fibers are compact stack-smooth quotients; their
        // dimension rows must be Poincare symmetric.
        int g = section.int_key("genus");
        int k = section.int_key("stratum");
        if (k == g - 1) {
            auto row = section.table.dimension_row();
            for (std::size_t d = 0; d < row.size(); ++d) {
                if (row[d] != row[row.size() - 1 - d])
                    throw Error("fiber table " + section.name() +
                                " fails Poincare symmetry at degree " + std::to_string(d));
            }
        }
    }
    sections_[section.name()] = section;
}

void DatasetRegistry::override_from_directory(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".ihdat")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open dataset file " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        DatasetFile file = parse_dataset(buffer.str());
        for (const auto& section : file.sections) put(section);
    }
}

bool DatasetRegistry::has(const std::string& name) const { return sections_.count(name) > 0; }

const DatasetSection& DatasetRegistry::section(const std::string& name) const {
    auto it = sections_.find(name);
    if (it == sections_.end()) throw Error("no dataset named '" + name + "'");
    return it->second;
}

std::vector<std::string> DatasetRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(sections_.size());
    for (const auto& [name, section] : sections_) out.push_back(name);
    return out;
}

const GradedTable& DatasetRegistry::fiber(int genus, int stratum) const {
    return section("fiber g=" + std::to_string(genus) + " k=" + std::to_string(stratum)).table;
}

const GysinPage& DatasetRegistry::gysin(int genus, int stratum) const {
    return section("gysin g=" + std::to_string(genus) + " k=" + std::to_string(stratum)).page;
}

BettiTable DatasetRegistry::betti(const std::string& name) const {
    const DatasetSection& s = section("betti " + name);
    int top = s.int_key("top");
    BettiTable table = BettiTable::zeros(top);
    for (const auto& [degree, value] : s.table.entries())
        table.set(degree, BettiEntry::known(value.multiplicity(Partition(), std::nullopt)));
    for (int degree : s.unknown_degrees) table.set(degree, BettiEntry::unknown());
    return table;
}

std::string DatasetRegistry::toroidal_name(int genus) const {
    switch (genus) {
        case 1:
            return "sat1";
        case 2:
            return "oab2";
        case 3:
            return "oab3";
        case 4:
            return "vor4";
        default:
            throw Error("no dataset for genus " + std::to_string(genus));
    }
}

BettiTable DatasetRegistry::toroidal(int genus) const { return betti(toroidal_name(genus)); }

std::vector<const DatasetSection*> DatasetRegistry::link_seeds() const {
    std::vector<const DatasetSection*> seeds;
    for (const auto& [name, section] : sections_)
        if (section.kind == DatasetSection::Kind::LinkSeed) seeds.push_back(&section);
    return seeds;
}

}  // namespace ihsat
