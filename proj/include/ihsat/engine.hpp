#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ihsat/betti.hpp"
#include "ihsat/dataset.hpp"
#include "ihsat/graded_table.hpp"
#include "ihsat/links.hpp"
#include "ihsat/stratification.hpp"
#include "ihsat/taut_ring.hpp"

namespace ihsat {

// One new local system found over a stratum: the stratum index, the fiber
// degree j it appeared in, and the system itself.  The derived shift label
// i = j - codim(stratum) is the bracketed offset the summand tables print.
struct LedgerEntry {
    int stratum = 0;
    int fiber_degree = 0;
    IrrepSum system;
    int shift_label = 0;
};

// A per-degree accumulation of contributions that may still contain unknown
// link groups: the known part plus a list of (symbol, coefficient) pairs in
// first-appearance order.
struct SymbolicSum {
    IrrepSum known;
    std::vector<std::pair<LinkSymbol, long long>> unknowns;

    bool has_unknowns() const { return !unknowns.empty(); }
    void add_unknown(const LinkSymbol& symbol, long long coeff);
    std::string to_string() const;
};

using SymbolicTable = std::map<int, SymbolicSum>;

// Predicted fiber cohomology over stratum k from the intersection complex of
// the total space (the open-stratum unit, stratum = g) and every new local
// system already found on bigger strata: an entry (r, j, G) contributes
// IH^{d-j}(N_{k,r}, G) at degree d for 0 <= d-j <= s_r - s_k - 1.  Known
// link values substitute; everything else stays symbolic (and the link is
// marked, so it shows up in the link report).
SymbolicTable predicted_contributions(int k, const std::vector<LedgerEntry>& sources,
                                      LinkStore& links, const Stratification& strat);

struct InferenceResult {
    std::vector<LedgerEntry> entries;
    std::vector<Constraint> constraints;
    std::map<int, IrrepSum> new_systems;  // degree -> system, including mirrored copies
};

// Compare the fiber table with the predictions.  Stage 1: in unknown-free
// degrees the difference is a new local system.  Stage 2: new systems are
// reflected about codim(stratum) (relative hard Lefschetz); the engine is
// minimal-new: nothing beyond stage 1 plus symmetry is ever added.  Stage 3:
// degrees with symbolic unknowns become constraints
//   sum of unknowns = fiber(d) - known(d) - new(d).
InferenceResult infer_new_systems(int k, const GradedTable& fiber, const SymbolicTable& predicted,
                                  const Stratification& strat);

// The degree of one IH group of a smaller Satake space with nontrivial
// coefficients, e.g. IH6(Sat_3,V[1,1]); these stay symbolic through the
// global assembly.
struct CoeffIHSymbol {
    int genus = 0;
    Partition coeff;
    int degree = 0;

    std::string to_string() const;
    friend bool operator==(const CoeffIHSymbol&, const CoeffIHSymbol&) = default;
    std::strong_ordering operator<=>(const CoeffIHSymbol&) const;
};

// One display row of the summand table: a shifted copy of a smaller IH
// table, or the merged new-part row of the deepest stratum.
struct SummandRow {
    std::string label;
    std::vector<std::optional<BettiEntry>> cells;  // blank outside the support
};

struct Assembly {
    BettiTable ih;                                 // IH of the Satake space
    std::vector<SummandRow> rows;                  // contributions, display order
    BettiTable sum_row;                            // ih + all known rows per degree
    std::vector<std::string> relations;            // open-degree identities and bounds
    std::map<CoeffIHSymbol, long long> resolved_coeff;
    std::vector<CoeffIHSymbol> open_coeff;
    std::map<int, long long> toroidal_lower_bounds;  // degree -> derived bound
};

// Subtract every ledger contribution from the toroidal Betti row:
// IH^m(Sat_g) = h^m(toroidal) - sum over entries (k, j, G) of
// dim IH^{m-j}(Sat_k, G), with trivial-coefficient summands taken from the
// recursive tables and the rest kept symbolic.  The tautological dimensions
// are a lower bound for IH (the lambda classes inject), which is what forces
// the symbolic summands to zero in fully-known degrees and produces the
// lower bounds in open ones.
Assembly assemble_global(int g, const BettiTable& toroidal, const std::string& toroidal_label,
                         const std::vector<LedgerEntry>& ledger,
                         const std::map<int, BettiTable>& recursive_ih, const GradedDims& taut);

// The point blow-up split: for an n-fold with one singular point resolved by
// an exceptional divisor E,
//   IH^j = h^j(blown up)                 for j in {0, 1, 2n-1, 2n}
//        = h^j - h^j(E)                  for n <= j <= 2n-2
//        = h^j - h^{2n-j}(E)             for 2 <= j <= n-1.
BettiTable blowup_split(const BettiTable& blown_up, const GradedTable& exceptional, int n);

struct StratumStep {
    int stratum = 0;
    GradedTable fiber;
    SymbolicTable predicted;
    std::map<int, IrrepSum> new_systems;
    std::vector<Constraint> constraints;  // as derived, before resolution
};

struct GenusResult {
    int genus = 0;
    Stratification strat;
    int defect_value = 0;
    BettiTable toroidal;  // input row; open degrees upgraded with derived bounds
    std::string toroidal_label;
    std::vector<StratumStep> steps;  // strata in run order, k = g-1 .. 0
    std::vector<LedgerEntry> ledger;
    std::vector<Constraint> retained;  // surviving multi-symbol constraints
    Assembly assembly;
    std::optional<BettiTable> perf;         // rank 4: the blow-down space
    std::optional<BettiTable> exceptional;  // rank 4: H*(E) dimensions
    std::vector<std::string> notes;         // dataset caveats worth surfacing
};

// Runs the whole per-genus pipeline against a dataset registry, caching
// results: smaller genera are computed first and feed both the link store
// and the recursive IH tables.  Genus runs are data-bounded at 4.
class Engine {
public:
    explicit Engine(DatasetRegistry registry);

    const GenusResult& genus(int g);
    const LinkStore& links() const { return links_; }
    const DatasetRegistry& registry() const { return registry_; }

private:
    GenusResult run_genus(int g);
    void seed_links(int g);

    DatasetRegistry registry_;
    LinkStore links_;
    std::map<int, GenusResult> cache_;
    int seeded_up_to_ = 0;
};

// Post-run audit of the dimension bookkeeping: over every stratum and fully
// resolved degree, dim fiber = dim known predictions + dim new systems +
// resolved unknown dims.  Returns false and fills *first_failure on the
// first violated degree.
bool verify_dimension_bookkeeping(const GenusResult& result, const LinkStore& links,
                                  std::string* first_failure = nullptr);

}  // namespace ihsat
