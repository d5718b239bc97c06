#include "ihsat/engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "ihsat/errors.hpp"
#include "ihsat/spectral.hpp"

namespace ihsat {

void SymbolicSum::add_unknown(const LinkSymbol& symbol, long long coeff) {
    for (auto& [existing, c] : unknowns) {
        if (existing == symbol) {
            c += coeff;
            return;
        }
    }
    unknowns.push_back({symbol, coeff});
}

std::string SymbolicSum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [symbol, coeff] : unknowns) {
        if (!first) os << " + ";
        first = false;
        if (coeff != 1) os << coeff << " ";
        os << symbol.to_string();
    }
    if (!known.is_zero()) {
        if (!first) os << " + ";
        first = false;
        os << known.to_string();
    }
    if (first) os << "0";
    return os.str();
}

SymbolicTable predicted_contributions(int k, const std::vector<LedgerEntry>& sources,
                                      LinkStore& links, const Stratification& strat) {
    SymbolicTable table;
    for (const auto& src : sources) {
        if (src.stratum <= k)
            throw Error("ledger entry on stratum " + std::to_string(src.stratum) +
                        " cannot contribute over stratum " + std::to_string(k));
        const int truncation = strat.s(src.stratum) - strat.s(k) - 1;  // q <= truncation
        for (const auto& [term, mult] : src.system.terms()) {
            if (term.second)
                throw Error("ledger systems must not carry twist tags");
            LinkKey link{k, src.stratum, term.first};
            for (int q = 0; q <= truncation; ++q) {
                const int degree = src.fiber_degree + q;
                if (auto value = links.lookup(link, q)) {
                    if (!value->is_zero()) table[degree].known.add(mult * *value);
                } else {
                    links.mark_symbolic(link);
                    table[degree].add_unknown({link, q}, mult);
                }
            }
        }
    }
    return table;
}

InferenceResult infer_new_systems(int k, const GradedTable& fiber, const SymbolicTable& predicted,
                                  const Stratification& strat) {
    InferenceResult result;
    const int axis = strat.total_dim - strat.s(k);  // codim of the stratum
    const int fk = strat.f(k);
    int top = fiber.max_degree();
    if (!predicted.empty()) top = std::max(top, predicted.rbegin()->first);

    auto context = [k](int d) {
        return "stratum " + std::to_string(k) + ", degree " + std::to_string(d);
    };

    // Stage 1: in unknown-free degrees the difference fiber - predicted is new.
    std::map<int, IrrepSum> forced;
    std::set<int> determined;
    for (int d = 0; d <= top; ++d) {
        auto it = predicted.find(d);
        if (it != predicted.end() && it->second.has_unknowns()) continue;
        IrrepSum known = it == predicted.end() ? IrrepSum::zero() : it->second.known;
        IrrepSum diff;
        try {
            diff = fiber.at(d).subtract(known);
        } catch (const NegativeMultiplicityError& e) {
            throw NegativeMultiplicityError(context(d) +
                                            ": accounted contributions exceed the fiber: " + e.what());
        }
        determined.insert(d);
        if (!diff.is_zero()) forced[d] = diff;
    }

    // Stage 2: reflect about the codimension axis.  A copy forced above the
    // axis lands below it (and vice versa); where both sides were already
    // determined, the symmetry must hold on its own.
    result.new_systems = forced;
    for (const auto& [d, system] : forced) {
        const int mirror = 2 * axis - d;
        if (mirror == d) continue;
        if (determined.count(mirror)) {
            auto it = forced.find(mirror);
            const IrrepSum& other = it == forced.end() ? IrrepSum::zero() : it->second;
            if (!other.equals(system))
                throw ContradictionError(context(d) + ": new systems are not symmetric about " +
                                         std::to_string(axis) + " (mirror degree " +
                                         std::to_string(mirror) + " has " + other.to_string() +
                                         ", expected " + system.to_string() + ")");
        } else {
            if (mirror < 0)
                throw ContradictionError(context(d) + ": mirrored new system falls below degree 0");
            result.new_systems[mirror] = system;
        }
    }

    const int shift_bound = std::max(0, 2 * fk + strat.s(k) - strat.total_dim);
    for (const auto& [j, system] : result.new_systems) {
        if (j > 2 * fk)
            throw ContradictionError(context(j) + ": new system beyond the fiber top degree " +
                                     std::to_string(2 * fk));
        const int shift = j - axis;
        if (shift > shift_bound || shift < -shift_bound)
            throw ContradictionError(context(j) + ": shift " + std::to_string(shift) +
                                     " exceeds the defect bound " + std::to_string(shift_bound));
        result.entries.push_back({k, j, system, shift});
    }

    // Stage 3: unknown-bearing degrees become constraints.
    for (const auto& [d, sum] : predicted) {
        if (!sum.has_unknowns()) continue;
        IrrepSum rhs;
        try {
            rhs = fiber.at(d).subtract(sum.known);
            auto it = result.new_systems.find(d);
            if (it != result.new_systems.end()) rhs = rhs.subtract(it->second);
        } catch (const NegativeMultiplicityError& e) {
            throw NegativeMultiplicityError(context(d) +
                                            ": accounted contributions exceed the fiber: " + e.what());
        }
        result.constraints.push_back({sum.unknowns, std::move(rhs), k, d});
    }
    return result;
}

std::string CoeffIHSymbol::to_string() const {
    return "IH" + std::to_string(degree) + "(Sat_" + std::to_string(genus) + "," +
           coeff.to_string() + ")";
}

std::strong_ordering CoeffIHSymbol::operator<=>(const CoeffIHSymbol& other) const {
    if (auto c = genus <=> other.genus; c != 0) return c;
    if (auto c = coeff <=> other.coeff; c != 0) return c;
    return degree <=> other.degree;
}

namespace {

std::string ih_label(int g) { return "IH(Sat_" + std::to_string(g) + ")"; }

// Pretty label for one summand row: "2 ih(Sat_2) [-1]".
std::string summand_label(const LedgerEntry& entry, const Partition& coeff, long long mult) {
    std::ostringstream os;
    if (mult != 1) os << mult << " ";
    os << "ih(Sat_" << entry.stratum;
    if (!coeff.is_trivial()) os << "," << coeff.to_string();
    os << ") [" << entry.shift_label << "]";
    return os.str();
}

}  // namespace

Assembly assemble_global(int g, const BettiTable& toroidal, const std::string& toroidal_label,
                         const std::vector<LedgerEntry>& ledger,
                         const std::map<int, BettiTable>& recursive_ih, const GradedDims& taut) {
    Assembly out;
    const int top = g * (g + 1);

    // Per-degree contribution of the whole ledger.
    struct DegreeContribution {
        long long known = 0;
        std::map<CoeffIHSymbol, long long> symbols;
    };
    std::vector<DegreeContribution> contrib(static_cast<std::size_t>(top) + 1);

    auto sub_ih = [&](int stratum) -> const BettiTable& {
        auto it = recursive_ih.find(stratum);
        if (it == recursive_ih.end())
            throw Error("assembly is missing the recursive IH table for genus " +
                        std::to_string(stratum));
        return it->second;
    };

    for (const auto& entry : ledger) {
        for (const auto& [term, mult] : entry.system.terms()) {
            const Partition& coeff = term.first;
            for (int m = 0; m <= top; ++m) {
                const int i = m - entry.fiber_degree;
                if (i < 0 || i > entry.stratum * (entry.stratum + 1)) continue;
                if (coeff.is_trivial()) {
                    BettiEntry e = entry.stratum == 0 ? (i == 0 ? BettiEntry::known(1)
                                                                : BettiEntry::known(0))
                                                      : sub_ih(entry.stratum).at(i);
                    if (!e.is_known())
                        throw Error("recursive IH table for genus " + std::to_string(entry.stratum) +
                                    " has an open entry at degree " + std::to_string(i));
                    contrib[static_cast<std::size_t>(m)].known += mult * e.value;
                } else {
                    contrib[static_cast<std::size_t>(m)]
                        .symbols[{entry.stratum, coeff, i}] += mult;
                }
            }
        }
    }

    // Solve degree by degree.  The taut dimensions bound IH from below, and
    // every symbolic summand is non-negative; equality pins both.
    out.ih = BettiTable::zeros(top);
    for (int m = 0; m <= top; ++m) {
        const auto& c = contrib[static_cast<std::size_t>(m)];
        const long long r = taut.at(m);
        const BettiEntry tor = toroidal.at(m);
        if (tor.is_known()) {
            const long long x = tor.value - c.known;
            if (x < 0)
                throw NegativeMultiplicityError(
                    "degree " + std::to_string(m) + ": ledger contributions (" +
                    std::to_string(c.known) + ") exceed the toroidal row (" +
                    std::to_string(tor.value) + ")");
            if (x < r)
                throw ContradictionError("degree " + std::to_string(m) +
                                         ": residual " + std::to_string(x) +
                                         " is below the tautological dimension " + std::to_string(r));
            if (c.symbols.empty()) {
                out.ih.set(m, BettiEntry::known(x));
            } else if (x == r) {
                out.ih.set(m, BettiEntry::known(r));
                for (const auto& [sym, coeff] : c.symbols) {
                    auto it = out.resolved_coeff.find(sym);
                    if (it != out.resolved_coeff.end() && it->second != 0)
                        throw ContradictionError(sym.to_string() + " resolved twice inconsistently");
                    out.resolved_coeff[sym] = 0;
                }
            } else {
                out.ih.set(m, BettiEntry::bounded(r));
                std::ostringstream rel;
                rel << ih_label(g) << " degree " << m << ": IH" << m << "(Sat_" << g << ")";
                for (const auto& [sym, coeff] : c.symbols) {
                    rel << " + ";
                    if (coeff != 1) rel << coeff << " ";
                    rel << sym.to_string();
                    out.open_coeff.push_back(sym);
                }
                rel << " = " << x;
                out.relations.push_back(rel.str());
            }
        } else {
            // Open toroidal degree: record the linear relation and the bound
            // it implies for the toroidal row.
            out.ih.set(m, BettiEntry::bounded(r));
            std::ostringstream rel;
            rel << "h" << m << "(" << toroidal_label << ") = IH" << m << "(Sat_" << g << ")";
            for (const auto& [sym, coeff] : c.symbols) {
                rel << " + ";
                if (coeff != 1) rel << coeff << " ";
                rel << sym.to_string();
                out.open_coeff.push_back(sym);
            }
            if (c.known != 0) rel << " + " << c.known;
            out.relations.push_back(rel.str());
            out.relations.push_back("IH" + std::to_string(m) + "(Sat_" + std::to_string(g) +
                                    ") >= " + std::to_string(r));
            out.toroidal_lower_bounds[m] = r + c.known;
            out.relations.push_back("h" + std::to_string(m) + "(" + toroidal_label +
                                    ") >= " + std::to_string(r + c.known));
        }
    }

    // Drop open symbols that a later degree resolved to zero.
    out.open_coeff.erase(std::remove_if(out.open_coeff.begin(), out.open_coeff.end(),
                                        [&](const CoeffIHSymbol& s) {
                                            return out.resolved_coeff.count(s) > 0;
                                        }),
                         out.open_coeff.end());
    std::sort(out.open_coeff.begin(), out.open_coeff.end());
    out.open_coeff.erase(std::unique(out.open_coeff.begin(), out.open_coeff.end()),
                         out.open_coeff.end());

    // Display rows: one per ledger entry and coefficient (strata descending,
    // degrees ascending, which is ledger order), with the deepest stratum
    // merged into a single new-part row.
    std::optional<SummandRow> point_row;
    for (const auto& entry : ledger) {
        // Trivial-coefficient row first, then the nontrivial ones.
        std::vector<std::pair<Partition, long long>> parts;
        for (const auto& [term, mult] : entry.system.terms())
            if (term.first.is_trivial()) parts.push_back({term.first, mult});
        for (const auto& [term, mult] : entry.system.terms())
            if (!term.first.is_trivial()) parts.push_back({term.first, mult});
        for (const auto& [coeff, mult] : parts) {
            if (entry.stratum == 0) {
                if (!coeff.is_trivial())
                    throw Error("nontrivial local system on the point stratum");
                if (!point_row) {
                    point_row = SummandRow{"new part of H*(F_{0," + std::to_string(g) + "}) [0]",
                                           std::vector<std::optional<BettiEntry>>(
                                               static_cast<std::size_t>(top) + 1)};
                }
                point_row->cells[static_cast<std::size_t>(entry.fiber_degree)] =
                    BettiEntry::known(mult);
                continue;
            }
            SummandRow row;
            row.label = summand_label(entry, coeff, mult);
            row.cells.resize(static_cast<std::size_t>(top) + 1);
            const int sub_top = entry.stratum * (entry.stratum + 1);
            for (int i = 0; i <= sub_top; ++i) {
                const int m = entry.fiber_degree + i;
                if (m > top) break;
                BettiEntry cell;
                if (coeff.is_trivial()) {
                    BettiEntry e = sub_ih(entry.stratum).at(i);
                    cell = BettiEntry::known(mult * e.value);
                } else {
                    CoeffIHSymbol sym{entry.stratum, coeff, i};
                    auto it = out.resolved_coeff.find(sym);
                    if (it != out.resolved_coeff.end())
                        cell = BettiEntry::known(mult * it->second);
                    else
                        cell = BettiEntry::unknown();
                }
                row.cells[static_cast<std::size_t>(m)] = cell;
            }
            out.rows.push_back(std::move(row));
        }
    }
    if (point_row) out.rows.push_back(std::move(*point_row));

    // Sum row: IH plus every known cell; a bounded IH entry contributes its
    // bound, so the sum row is itself a bound in open degrees.
    out.sum_row = BettiTable::zeros(top);
    for (int m = 0; m <= top; ++m) {
        long long total = out.ih.at(m).value;
        bool bounded = !out.ih.at(m).is_known();
        for (const auto& row : out.rows) {
            const auto& cell = row.cells[static_cast<std::size_t>(m)];
            if (!cell) continue;
            if (cell->is_known())
                total += cell->value;
            else
                bounded = true;
        }
        out.sum_row.set(m, bounded ? BettiEntry::bounded(total) : BettiEntry::known(total));
    }
    return out;
}

BettiTable blowup_split(const BettiTable& blown_up, const GradedTable& exceptional, int n) {
    const int top = 2 * n;
    if (exceptional.max_degree() > 2 * (n - 1))
        throw BadDimsError("exceptional divisor has degrees beyond 2(n-1)");
    auto e_dims = exceptional.dimension_row();
    auto e_at = [&](int j) -> long long {
        if (j < 0 || j >= static_cast<int>(e_dims.size())) return 0;
        return static_cast<long long>(e_dims[static_cast<std::size_t>(j)]);
    };
    BettiTable out = BettiTable::zeros(top);
    for (int j = 0; j <= top; ++j) {
        BettiEntry value = blown_up.at(j);
        try {
            if (j >= n && j <= top - 2)
                value = value.minus(e_at(j));
            else if (j >= 2 && j <= n - 1)
                value = value.minus(e_at(top - j));
        } catch (const NegativeMultiplicityError& e) {
            throw NegativeMultiplicityError("blow-up split at degree " + std::to_string(j) + ": " +
                                            e.what());
        }
        out.set(j, value);
    }
    return out;
}

Engine::Engine(DatasetRegistry registry) : registry_(std::move(registry)) {}

void Engine::seed_links(int g) {
    for (int r = seeded_up_to_ + 1; r <= g; ++r) {
        GradedTable circle = circle_link_ih(r);
        LinkKey key{r - 1, r, Partition()};
        for (int q = 0; q <= r - 1; ++q) links_.set(key, q, circle.at(q));
        // Every link with trivial coefficients starts with IH^0 = Q: the base
        // is unibranched along each stratum.
        for (int k = 0; k < r; ++k) links_.set(LinkKey{k, r, Partition()}, 0, IrrepSum::trivial());
        // Externally supplied link values for this upper stratum.
        for (const DatasetSection* seed : registry_.link_seeds()) {
            if (seed->int_key("upper") != r) continue;
            int lower = seed->int_key("lower");
            Partition coeff = parse_partition_literal(seed->keys.at("coeff"), lower);
            for (const auto& [q, value] : seed->table.entries())
                links_.set(LinkKey{lower, r, coeff}, q, value);
        }
    }
    seeded_up_to_ = std::max(seeded_up_to_, g);
}

const GenusResult& Engine::genus(int g) {
    if (g < 1) throw Error("genus must be >= 1");
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    if (g > 1) genus(g - 1);  // recursion: smaller genera feed links and IH tables
    GenusResult result = run_genus(g);
    return cache_.emplace(g, std::move(result)).first->second;
}

GenusResult Engine::run_genus(int g) {
    GenusResult result;
    result.genus = g;
    result.toroidal_label = registry_.toroidal_name(g);
    result.toroidal = registry_.toroidal(g);

    if (g == 1) {
        // Base case: the compactification is already smooth, IH = H = (1,0,1).
        result.strat = make_stratification(1, {0});
        result.defect_value = defect(result.strat);
        result.assembly.ih = result.toroidal;
        result.assembly.sum_row = result.toroidal;
        return result;
    }

    // Fiber dimensions come from the top degrees of the fiber tables.
    std::vector<int> fiber_dims(static_cast<std::size_t>(g));
    for (int k = 0; k < g; ++k) {
        const GradedTable& fiber = registry_.fiber(g, k);
        int top = fiber.max_degree();
        if (top < 0 || top % 2 != 0)
            throw Error("fiber table g=" + std::to_string(g) + " k=" + std::to_string(k) +
                        " has no valid top degree");
        fiber_dims[static_cast<std::size_t>(k)] = top / 2;
    }
    result.strat = make_stratification(g, fiber_dims);
    result.defect_value = defect(result.strat);
    seed_links(g);

    std::vector<LedgerEntry> sources;
    sources.push_back({g, 0, IrrepSum::trivial(), 0});  // the open-stratum unit

    std::vector<Constraint> surviving;
    for (int k = g - 1; k >= 0; --k) {
        StratumStep step;
        step.stratum = k;
        step.fiber = registry_.fiber(g, k);
        step.predicted = predicted_contributions(k, sources, links_, result.strat);
        InferenceResult inferred = infer_new_systems(k, step.fiber, step.predicted, result.strat);
        step.new_systems = inferred.new_systems;
        step.constraints = inferred.constraints;
        for (const auto& entry : inferred.entries) {
            sources.push_back(entry);
            result.ledger.push_back(entry);
        }
        std::vector<Constraint> open = resolve_links(inferred.constraints, links_);
        surviving.insert(surviving.end(), open.begin(), open.end());
        result.steps.push_back(std::move(step));
    }
    // Later strata may have pinned symbols that earlier constraints mention.
    result.retained = resolve_links(surviving, links_);
    std::sort(result.retained.begin(), result.retained.end(),
              [](const Constraint& a, const Constraint& b) {
                  return std::tie(a.stratum, a.degree) < std::tie(b.stratum, b.degree);
              });

    std::map<int, BettiTable> recursive_ih;
    for (int k = 1; k < g; ++k) recursive_ih[k] = cache_.at(k).assembly.ih;
    result.assembly = assemble_global(g, result.toroidal, result.toroidal_label, result.ledger,
                                      recursive_ih, taut_graded_dims(g));

    // Fold derived bounds back into the toroidal row, then split off the
    // exceptional divisor where the space is a point blow-up.
    for (const auto& [degree, bound] : result.assembly.toroidal_lower_bounds)
        result.toroidal.set(degree, BettiEntry::bounded(bound));
    if (g == 4) {
        const DatasetSection& e_section = registry_.section("betti E");
        GradedTable e_table = e_section.table;
        if (!e_section.note.empty()) result.notes.push_back("H*(E): " + e_section.note);
        BettiTable perf = blowup_split(result.toroidal, e_table, result.strat.total_dim);
        result.exceptional = registry_.betti("E");
        for (int j = 0; j <= perf.top(); ++j) {
            if (!perf.at(j).is_known())
                result.assembly.relations.push_back(
                    "IH" + std::to_string(j) + "(Perf_4) >= " + std::to_string(perf.at(j).value));
        }
        auto e_row = registry_.betti("E");
        result.assembly.relations.push_back("IH10(Perf_4) = h10(" + result.toroidal_label + ") - " +
                                            std::to_string(e_row.at(10).value));
        result.perf = std::move(perf);
    }
    return result;
}

bool verify_dimension_bookkeeping(const GenusResult& result, const LinkStore& links,
                                  std::string* first_failure) {
    for (const auto& step : result.steps) {
        const int genus_of_stratum = step.stratum;
        int top = step.fiber.max_degree();
        if (!step.predicted.empty()) top = std::max(top, step.predicted.rbegin()->first);
        for (int d = 0; d <= top; ++d) {
            auto it = step.predicted.find(d);
            std::uint64_t accounted = 0;
            bool resolvable = true;
            if (it != step.predicted.end()) {
                accounted += it->second.known.total_dimension(genus_of_stratum);
                for (const auto& [symbol, coeff] : it->second.unknowns) {
                    auto value = links.lookup(symbol.key, symbol.degree);
                    if (!value) {
                        resolvable = false;
                        break;
                    }
                    accounted += static_cast<std::uint64_t>(coeff) *
                                 value->total_dimension(genus_of_stratum);
                }
            }
            if (!resolvable) continue;
            auto nit = step.new_systems.find(d);
            if (nit != step.new_systems.end())
                accounted += nit->second.total_dimension(genus_of_stratum);
            std::uint64_t fiber_dim = step.fiber.at(d).total_dimension(genus_of_stratum);
            if (fiber_dim != accounted) {
                if (first_failure)
                    *first_failure = "stratum " + std::to_string(step.stratum) + ", degree " +
                                     std::to_string(d) + ": fiber dimension " +
                                     std::to_string(fiber_dim) + " != accounted " +
                                     std::to_string(accounted);
                return false;
            }
        }
    }
    return true;
}

}  // namespace ihsat
