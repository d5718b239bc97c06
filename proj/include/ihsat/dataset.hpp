#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ihsat/betti.hpp"
#include "ihsat/graded_table.hpp"
#include "ihsat/spectral.hpp"

namespace ihsat {

// One section of an .ihdat file.  Grammar:
//
//   section     := '[' kind (key '=' value)* ']'
//   kind        := 'fiber' | 'betti' | 'gysin' | 'link-seed'
//   body line   := degree ':' expr [';' 'weight' INT]        (fiber, link-seed)
//                | degree ':' (INT | '?')                    (betti)
//                | '(' p ',' q ')' ':' expr                  (gysin)
//                | 'differential' '(' p ',' q ')' '->' '(' p+1 ',' q ')' ':' expr
//   expr        := term ('+' term)*
//   term        := [INT ('*' | ' ')] atom
//   atom        := ('Q' | 'V[' INT (',' INT)* ']') ['(' INT ')']
//
// Comments start with '#'.  Expressions validate against the section's
// ambient genus (fiber/gysin: the 'stratum' key; link-seed: 'lower').
// '?' entries are allowed only in betti sections.
struct DatasetSection {
    enum class Kind { Fiber, Betti, Gysin, LinkSeed };

    Kind kind = Kind::Fiber;
    std::map<std::string, std::string> keys;  // raw header key=value pairs
    std::string note;                         // provenance note, if any

    // fiber / link-seed payload (and betti, with every term a multiple of Q)
    GradedTable table;
    std::vector<int> unknown_degrees;  // betti '?' rows

    // gysin payload
    GysinPage page;

    std::string name() const;  // registry key, derived from kind + keys
    int ambient_genus() const;

    int int_key(const std::string& key) const;            // throws if absent
    std::optional<int> opt_int_key(const std::string& key) const;
};

struct DatasetFile {
    std::vector<DatasetSection> sections;
};

// Parse one .ihdat text.  Throws ParseError / GenusMismatchError /
// DuplicateDegreeError with 1-based line numbers.
DatasetFile parse_dataset(const std::string& text);

// Parse a bare partition literal, "Q" or "V[a1,a2,...]".
Partition parse_partition_literal(const std::string& text, int ambient_genus);

// Canonical text form; parse(serialize(x)) reproduces x.
std::string serialize_dataset(const DatasetFile& file);

// All tables the engine needs, keyed by section name
// ("fiber g=4 k=2", "betti vor4", "gysin g=4 k=1", ...).
class DatasetRegistry {
public:
    // Built-in tables shipped with the library.
    static DatasetRegistry builtin();

    // Parse every *.ihdat file under dir and replace same-named sections.
    void override_from_directory(const std::string& dir);
    void put(const DatasetSection& section);

    bool has(const std::string& name) const;
    const DatasetSection& section(const std::string& name) const;
    std::vector<std::string> names() const;

    // Typed accessors used by the engine.
    const GradedTable& fiber(int genus, int stratum) const;
    const GysinPage& gysin(int genus, int stratum) const;
    BettiTable betti(const std::string& name) const;
    BettiTable toroidal(int genus) const;  // oab2 / oab3 / vor4
    std::string toroidal_name(int genus) const;
    std::vector<const DatasetSection*> link_seeds() const;

private:
    std::map<std::string, DatasetSection> sections_;
};

}  // namespace ihsat
