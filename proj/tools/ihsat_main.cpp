// Command-line front end: per-genus decomposition runs, the corank-one link
// rows, tautological dimensions, defect, and the reproduction check suite.
//
// Exit codes: 0 success, 1 engine inconsistency (bad data), 2 usage or parse
// error.  Reports go to stdout, diagnostics to stderr.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ihsat/checks.hpp"
#include "ihsat/engine.hpp"
#include "ihsat/errors.hpp"
#include "ihsat/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEngine = 1;
constexpr int kExitUsage = 2;

ihsat::DatasetRegistry load_registry(const std::string& data_dir) {
    ihsat::DatasetRegistry registry = ihsat::DatasetRegistry::builtin();
    if (!data_dir.empty()) registry.override_from_directory(data_dir);
    return registry;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposition-theorem bookkeeping for Satake compactifications of A_g"};
    app.require_subcommand(1);

    int genus = 0;
    std::string data_dir;
    std::string format = "text";
    bool emit_constraints = false;

    auto add_common = [&](CLI::App* cmd, bool with_data) {
        cmd->add_option("--format", format, "text or csv")
            ->check(CLI::IsMember({"text", "csv"}));
        if (with_data) cmd->add_option("--data", data_dir, "directory of *.ihdat overrides");
    };

    CLI::App* run = app.add_subcommand("run", "run the decomposition for one genus");
    run->add_option("--genus", genus, "genus, 1..4 (data-bounded)")->required();
    run->add_flag("--emit-constraints", emit_constraints, "print unresolved pairwise sums");
    add_common(run, true);

    CLI::App* links = app.add_subcommand("links", "IH of the corank-one link bundle");
    links->add_option("--genus", genus, "genus, 1..12")->required();

    CLI::App* taut = app.add_subcommand("taut", "graded dimensions of the tautological ring");
    taut->add_option("--genus", genus, "genus, 1..20")->required();

    CLI::App* defect_cmd = app.add_subcommand("defect", "defect of the contraction");
    defect_cmd->add_option("--genus", genus, "genus, 1..4")->required();
    defect_cmd->add_option("--data", data_dir, "directory of *.ihdat overrides");

    CLI::App* check = app.add_subcommand("check", "run every reproduction criterion");
    add_common(check, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            if (genus < 1 || genus > 4) {
                std::cerr << "error: no dataset for genus " << genus << " (run supports 1..4)\n";
                return kExitUsage;
            }
            ihsat::Engine engine(load_registry(data_dir));
            const ihsat::GenusResult& result = engine.genus(genus);
            ihsat::ReportOptions options;
            options.format =
                format == "csv" ? ihsat::ReportFormat::Csv : ihsat::ReportFormat::Text;
            options.emit_constraints = emit_constraints;
            std::cout << ihsat::serialize_report(result, engine.links(), options);
            return kExitOk;
        }
        if (links->parsed()) {
            if (genus < 1 || genus > 12) {
                std::cerr << "error: links supports genus 1..12\n";
                return kExitUsage;
            }
            std::cout << ihsat::links_report(genus);
            return kExitOk;
        }
        if (taut->parsed()) {
            if (genus < 1 || genus > 20) {
                std::cerr << "error: taut supports genus 1..20\n";
                return kExitUsage;
            }
            std::cout << ihsat::taut_report(genus);
            return kExitOk;
        }
        if (defect_cmd->parsed()) {
            if (genus < 1 || genus > 4) {
                std::cerr << "error: no dataset for genus " << genus << " (defect supports 1..4)\n";
                return kExitUsage;
            }
            ihsat::Engine engine(load_registry(data_dir));
            std::cout << ihsat::defect_report(engine.genus(genus).strat);
            return kExitOk;
        }
        if (check->parsed()) {
            auto results = ihsat::run_acceptance(load_registry(data_dir));
            bool all_pass = true;
            if (format == "csv") {
                std::cout << "id,name,status,detail\n";
                for (const auto& r : results) {
                    std::cout << r.id << "," << ihsat::csv_field(r.name) << ","
                              << (r.pass ? "pass" : "fail") << "," << ihsat::csv_field(r.detail)
                              << "\n";
                    all_pass = all_pass && r.pass;
                }
            } else {
                for (const auto& r : results) {
                    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name
                              << "\n";
                    if (!r.detail.empty()) std::cout << "      " << r.detail << "\n";
                    all_pass = all_pass && r.pass;
                }
                std::cout << (all_pass ? "all criteria passed\n" : "some criteria FAILED\n");
            }
            return all_pass ? kExitOk : kExitEngine;
        }
    } catch (const ihsat::ParseError& e) {
        std::cerr << "dataset error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ihsat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEngine;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEngine;
    }
    return kExitUsage;
}
