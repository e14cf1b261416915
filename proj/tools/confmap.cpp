#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "confmap/acceptance.hpp"
#include "confmap/config.hpp"
#include "confmap/error.hpp"
#include "confmap/runner.hpp"

namespace {

confmap::OutputFlags parse_emit(const std::string& list) {
    confmap::OutputFlags flags{false, false, false};
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "csv")
            flags.csv = true;
        else if (item == "json")
            flags.grid_json = true;
        else if (item == "svg")
            flags.svg = true;
        else if (!item.empty())
            throw confmap::ConfigError("--emit: unknown output '" + item + "' (expected csv, json, svg)");
    }
    return flags;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dipole simulation conformal mapping"};
    app.require_subcommand(1);
    int verbosity = 1;
    app.add_option("--verbosity", verbosity, "0 = quiet, 1 = summary, 2 = per-N detail")->check(CLI::Range(0, 2));

    auto* run = app.add_subcommand("run", "Run a sweep described by a JSON config");
    std::string config_path;
    std::string out_dir = ".";
    std::string emit;
    run->add_option("--config", config_path, "Run config (JSON)")->required()->check(CLI::ExistingFile);
    run->add_option("--out-dir", out_dir, "Output directory");
    run->add_option("--emit", emit, "Comma-separated outputs: csv,json,svg (default: from config)");
    run->add_option("--verbosity", verbosity, "0 = quiet, 1 = summary, 2 = per-N detail")->check(CLI::Range(0, 2));

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--verbosity", verbosity, "0 = quiet, 1 = summary, 2 = per-N detail")->check(CLI::Range(0, 2));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const confmap::RunConfig config = confmap::parse_config(config_path);
            const confmap::OutputFlags flags = emit.empty() ? config.outputs : parse_emit(emit);
            const auto outcome = confmap::run(config, out_dir, flags);
            for (const auto& w : outcome.warnings) std::cerr << "warning: " << w << "\n";
            if (verbosity >= 2 && !outcome.records.empty()) std::cout << confmap::sweep_csv(outcome.records);
            if (verbosity >= 1)
                for (const auto& p : outcome.written) std::cout << "wrote " << p.string() << "\n";
            for (const auto& r : outcome.records)
                if (r.failure) return 3;
            return 0;
        }
        const auto results = confmap::run_acceptance();
        std::ostringstream sink;
        const bool ok = confmap::report_acceptance(results, verbosity >= 1 ? std::cout : sink);
        if (verbosity == 0) std::cout << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? 0 : 1;
    } catch (const confmap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
