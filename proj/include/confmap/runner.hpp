#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "confmap/analysis.hpp"
#include "confmap/config.hpp"

namespace confmap {

inline constexpr const char* kSweepCsvHeader = "N,err_f,err_b,err_rho,res_f,res_b,cond_f,cond_b";

/// Sweep over config.N_list; errors are filled in only when an oracle exists.
std::vector<ConvergenceRecord> run_sweep(const RunConfig& config);

/// CSV text with header kSweepCsvHeader, one row per record, absent values as
/// empty fields and numbers at 17 significant digits. Failed rows carry only N.
std::string sweep_csv(std::span<const ConvergenceRecord> records);

struct RunOutcome {
    std::vector<ConvergenceRecord> records;
    std::vector<std::filesystem::path> written;
    std::vector<std::string> warnings;
};

/// Runs the sweep and writes the requested outputs into out_dir:
/// sweep.csv (+ sweep.log when some N failed), {forward,backward}_{preimage,image}.json/.svg
/// for the largest N.
RunOutcome run(const RunConfig& config, const std::filesystem::path& out_dir, const OutputFlags& emit);

}  // namespace confmap
