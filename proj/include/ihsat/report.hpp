#pragma once

#include <string>

#include "ihsat/engine.hpp"

namespace ihsat {

enum class ReportFormat { Text, Csv };

struct ReportOptions {
    ReportFormat format = ReportFormat::Text;
    bool emit_constraints = false;
};

// Full per-genus report: stratification summary, per-stratum comparison
// tables, new-system ledger, link cohomology, the assembly table whose
// summand rows add up to the toroidal row, the IH row, relations and notes.
// Output is deterministic: identical inputs give identical bytes.
std::string serialize_report(const GenusResult& result, const LinkStore& links,
                             const ReportOptions& options);

// The link-cohomology table over the symbolically-touched links, one row per
// (link, coefficient), degrees up to the middle, '?' for open groups.
std::string link_table_report(const LinkStore& links);

// Graded dimensions of the tautological ring, laid out as a two-row table.
std::string taut_report(int g);

// IH^q of the corank-one link for q below the truncation bound.
std::string links_report(int g);

std::string defect_report(const Stratification& strat);

// CSV helper: quotes fields containing commas or quotes.
std::string csv_field(const std::string& s);

}  // namespace ihsat
