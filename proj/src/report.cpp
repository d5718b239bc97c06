#include "ihsat/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "ihsat/spectral.hpp"
#include "ihsat/taut_ring.hpp"

namespace ihsat {

namespace {

// Column-aligned rendering for rows of short cells.
std::string align_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string cell = row[i];
            cell.insert(0, widths[i] - cell.size(), ' ');
            line += cell;
            if (i == 0) line += " |";
            if (i + 1 < row.size()) line += " ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

std::string stratum_heading(int g, int k, const Stratification& strat) {
    std::ostringstream os;
    os << "-- stratum A_" << k << " in Sat_" << g << " (dim " << strat.s(k) << ", codim "
       << strat.codim(k) << ", fiber dim " << strat.f(k) << ") --";
    return os.str();
}

void append_stratum_step(std::ostringstream& os, const GenusResult& result,
                         const StratumStep& step) {
    os << stratum_heading(result.genus, step.stratum, result.strat) << "\n";
    int top = step.fiber.max_degree();
    if (!step.predicted.empty()) top = std::max(top, step.predicted.rbegin()->first);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"d", "accounted", "fiber", "new"});
    for (int d = top; d >= 0; --d) {
        auto it = step.predicted.find(d);
        std::string accounted = it == step.predicted.end() ? "0" : it->second.to_string();
        std::string fiber = step.fiber.at(d).to_string();
        auto nit = step.new_systems.find(d);
        std::string fresh = nit == step.new_systems.end() ? "" : nit->second.to_string();
        rows.push_back({std::to_string(d), accounted, fiber, fresh});
    }
    // Left-align the wide columns by padding on the right instead.
    std::vector<std::size_t> widths(4, 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < 4; ++i) widths[i] = std::max(widths[i], row[i].size());
    for (const auto& row : rows) {
        std::ostringstream line;
        line << std::setw(static_cast<int>(widths[0])) << row[0] << " | "
             << row[1] << std::string(widths[1] - row[1].size(), ' ') << " | "
             << row[2] << std::string(widths[2] - row[2].size(), ' ') << " | " << row[3];
        std::string text = line.str();
        while (!text.empty() && text.back() == ' ') text.pop_back();
        os << text << "\n";
    }
    if (step.new_systems.empty()) {
        os << "no new local systems on A_" << step.stratum << "\n";
    } else {
        os << "new local systems on A_" << step.stratum << ":";
        bool first = true;
        for (const auto& [j, system] : step.new_systems) {
            os << (first ? " " : "; ") << "j=" << j << ": " << system.to_string() << " ["
               << j - (result.strat.total_dim - result.strat.s(step.stratum)) << "]";
            first = false;
        }
        os << "\n";
    }
    os << "\n";
}

void append_assembly(std::ostringstream& os, const GenusResult& result) {
    const auto& assembly = result.assembly;
    const int top = assembly.ih.top();
    os << "-- assembly --\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"j"};
    for (int j = 0; j <= top; ++j) header.push_back(std::to_string(j));
    rows.push_back(header);

    auto betti_cells = [&](const std::string& label, const BettiTable& table) {
        std::vector<std::string> row{label};
        for (int j = 0; j <= top; ++j) row.push_back(table.at(j).to_string());
        return row;
    };
    rows.push_back(betti_cells("h^j(" + result.toroidal_label + ")", result.toroidal));
    rows.push_back(betti_cells("ih^j(Sat_" + std::to_string(result.genus) + ")", assembly.ih));
    for (const auto& summand : assembly.rows) {
        std::vector<std::string> row{summand.label};
        for (int j = 0; j <= top; ++j) {
            const auto& cell = summand.cells[static_cast<std::size_t>(j)];
            row.push_back(cell ? cell->to_string() : "");
        }
        rows.push_back(row);
    }
    rows.push_back(betti_cells("sum of summands", assembly.sum_row));
    os << align_rows(rows);
    os << "IH(Sat_" << result.genus << ") = " << assembly.ih.to_string() << "\n";
    if (result.perf) os << "IH(Perf_4) = " << result.perf->to_string() << "\n";
    os << "\n";
}

void append_csv(std::ostringstream& os, const GenusResult& result, const ReportOptions& options) {
    os << "stratum,fiber_degree,system,shift_label\n";
    for (const auto& entry : result.ledger)
        os << entry.stratum << "," << entry.fiber_degree << ","
           << csv_field(entry.system.to_string()) << "," << entry.shift_label << "\n";
    os << "\n";
    os << "symbols,rhs\n";
    for (const auto& constraint : result.retained) {
        std::string lhs;
        for (std::size_t i = 0; i < constraint.unknowns.size(); ++i) {
            if (i > 0) lhs += " + ";
            if (constraint.unknowns[i].second != 1)
                lhs += std::to_string(constraint.unknowns[i].second) + " ";
            lhs += constraint.unknowns[i].first.to_string();
        }
        os << csv_field(lhs) << "," << csv_field(constraint.rhs.to_string()) << "\n";
    }
    os << "\n";
    os << "degree,ih\n";
    for (int j = 0; j <= result.assembly.ih.top(); ++j)
        os << j << "," << csv_field(result.assembly.ih.at(j).to_string()) << "\n";
    (void)options;
}

}  // namespace

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string link_table_report(const LinkStore& links) {
    std::ostringstream os;
    os << "-- link cohomology (degrees up to the middle; '?' = undetermined) --\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"", "dimR", "q:"});
    std::size_t max_cols = 0;
    for (const auto& key : links.symbolic_keys()) {
        const int d = key.real_dimension();
        const int middle = d / 2;
        std::vector<std::string> row{"IH^q(" + key.to_string() + ")", std::to_string(d), ""};
        for (int q = 0; q <= middle; ++q) {
            auto value = links.lookup(key, q);
            row.push_back(value ? value->to_string() : "?");
        }
        max_cols = std::max(max_cols, row.size());
        rows.push_back(std::move(row));
    }
    for (std::size_t q = 0; 3 + q < max_cols; ++q) rows[0].push_back(std::to_string(q));
    os << align_rows(rows);
    return os.str();
}

std::string serialize_report(const GenusResult& result, const LinkStore& links,
                             const ReportOptions& options) {
    std::ostringstream os;
    if (options.format == ReportFormat::Csv) {
        append_csv(os, result, options);
        return os.str();
    }
    os << "== decomposition run: genus " << result.genus << " ==\n";
    os << "policy: minimal-new (new systems only where forced by unknown-free degrees and "
          "hard-Lefschetz symmetry)\n";
    os << "stratification: n = " << result.strat.total_dim << "; s_k =";
    for (int s : result.strat.strata_dims) os << " " << s;
    os << "; f_k =";
    for (int f : result.strat.fiber_dims) os << " " << f;
    os << "\n";
    os << "defect = " << result.defect_value << "\n\n";

    for (const auto& step : result.steps) append_stratum_step(os, result, step);

    if (result.ledger.empty()) os << "no new local systems\n\n";

    if (!links.symbolic_keys().empty()) os << link_table_report(links) << "\n";

    if (options.emit_constraints) {
        os << "-- unresolved constraints (pairwise sums) --\n";
        if (result.retained.empty()) {
            os << "none\n";
        } else {
            for (const auto& constraint : result.retained) os << constraint.to_string() << "\n";
        }
        os << "\n";
    }

    append_assembly(os, result);

    if (!result.assembly.relations.empty()) {
        os << "-- open degrees --\n";
        for (const auto& relation : result.assembly.relations) os << relation << "\n";
        os << "\n";
    }
    if (!result.notes.empty()) {
        os << "-- dataset notes --\n";
        for (const auto& note : result.notes) os << note << "\n";
    }
    return os.str();
}

std::string taut_report(int g) {
    GradedDims dims = taut_graded_dims(g);
    std::vector<std::vector<std::string>> rows(2);
    rows[0].push_back("j");
    rows[1].push_back("r_j");
    for (int j = 0; j <= dims.top(); ++j) {
        rows[0].push_back(std::to_string(j));
        rows[1].push_back(std::to_string(dims.at(j)));
    }
    return align_rows(rows);
}

std::string links_report(int g) {
    GradedTable table = circle_link_ih(g);
    std::ostringstream os;
    os << "IH^q(N_{" << g - 1 << "," << g << "}) for q <= " << g - 1 << " (real dimension "
       << 2 * g - 1 << "):\n";
    for (int q = 0; q <= g - 1; ++q) os << "q=" << q << ": " << table.at(q).to_string() << "\n";
    return os.str();
}

std::string defect_report(const Stratification& strat) {
    std::ostringstream os;
    os << "genus " << strat.genus << ": n = " << strat.total_dim << ", fiber dims f_k =";
    for (int f : strat.fiber_dims) os << " " << f;
    os << "\n";
    os << "2 f_k + s_k - n per stratum:";
    for (int k = 0; k < strat.genus; ++k)
        os << " k=" << k << ": " << 2 * strat.f(k) + strat.s(k) - strat.total_dim << ";";
    os << "\n";
    os << "defect = " << defect(strat) << (defect(strat) == 0 ? " (semi-small)" : "") << "\n";
    return os.str();
}

}  // namespace ihsat
