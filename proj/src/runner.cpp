#include "confmap/runner.hpp"

#include <fstream>
#include <sstream>

#include "confmap/backward_map.hpp"
#include "confmap/error.hpp"
#include "confmap/grid.hpp"

namespace confmap {

namespace {

std::string field(const std::optional<double>& v) {
    if (!v) return {};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", *v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text, RunOutcome& out) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path.string());
    f << text;
    out.written.push_back(path);
}

}  // namespace

std::vector<ConvergenceRecord> run_sweep(const RunConfig& config) {
    SweepProblem problem{make_region(config.region), config.z0, config.rtilde_f, config.rtilde_b,
                         make_exact_case(config.region, config.z0),
                         static_cast<std::size_t>(config.M_factor)};
    return convergence_sweep(problem, config.N_list);
}

std::string sweep_csv(std::span<const ConvergenceRecord> records) {
    std::ostringstream o;
    o << kSweepCsvHeader << "\n";
    for (const auto& r : records) {
        o << r.N;
        if (r.failure) {
            o << ",,,,,,,\n";
            continue;
        }
        o << "," << field(r.err_forward) << "," << field(r.err_backward) << "," << field(r.err_modulus)
          << "," << field(r.residual_f) << "," << field(r.residual_b) << "," << field(r.cond_f) << ","
          << field(r.cond_b) << "\n";
    }
    return o.str();
}

RunOutcome run(const RunConfig& config, const std::filesystem::path& out_dir, const OutputFlags& emit) {
    std::filesystem::create_directories(out_dir);
    RunOutcome out;

    if (emit.csv) {
        out.records = run_sweep(config);
        write_file(out_dir / "sweep.csv", sweep_csv(out.records), out);
        std::ostringstream log;
        for (const auto& r : out.records)
            if (r.failure) log << "N=" << r.N << ": " << *r.failure << "\n";
        if (!log.str().empty()) write_file(out_dir / "sweep.log", log.str(), out);
    }

    if (emit.grid_json || emit.svg) {
        const int N = config.N_list.back();
        const Region region = make_region(config.region);
        const PointConfig cfg{N, config.rtilde_f, config.rtilde_b};
        try {
            const auto [fmap, frep] = build_forward(region, config.z0, cfg);
            const auto [bmap, brep] = build_backward(boundary_correspondence(fmap), cfg, canonical_of(fmap));
            const GridPair fwd = forward_grid(fmap);
            const GridPair bwd = backward_grid(bmap);
            const std::pair<const char*, const GridImage*> grids[] = {
                {"forward_preimage", &fwd.preimage},
                {"forward_image", &fwd.image},
                {"backward_preimage", &bwd.preimage},
                {"backward_image", &bwd.image},
            };
            for (const auto& [name, g] : grids) {
                if (g->polylines.empty()) out.warnings.push_back(std::string(name) + ": clipped grid is empty");
                if (emit.grid_json) write_file(out_dir / (std::string(name) + ".json"), to_json(*g), out);
                if (emit.svg) write_file(out_dir / (std::string(name) + ".svg"), to_svg(*g), out);
            }
        } catch (const Error& e) {
            out.warnings.push_back(std::string("grid emission skipped: ") + e.what());
        }
    }
    return out;
}

}  // namespace confmap
