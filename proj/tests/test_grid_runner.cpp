#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "confmap/backward_map.hpp"
#include "confmap/grid.hpp"
#include "confmap/reference.hpp"
#include "confmap/runner.hpp"

using namespace confmap;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

RunConfig disk_config() {
    return parse_config_text(
        R"({"region":{"kind":"disk"},"z0":[0.5,0],"N_list":[8,16,32],"rtilde_f":0.2,"rtilde_b":0.1})");
}

}  // namespace

TEST_CASE("identity forward grid") {
    const auto f = build_forward(disk_region(), 0.0, {32, 0.2, 0.1}).first;
    const GridPair g = forward_grid(f);
    REQUIRE(g.preimage.polylines.size() == g.image.polylines.size());
    for (std::size_t i = 0; i < g.image.polylines.size(); ++i) {
        CHECK(g.preimage.polylines[i].size() >= 2);
        for (std::size_t j = 0; j < g.image.polylines[i].size(); ++j)
            CHECK(std::abs(g.image.polylines[i][j] - g.preimage.polylines[i][j]) <= 1e-10);
    }
}

TEST_CASE("disk forward grid maps the boundary to the unit circle") {
    const auto f = build_forward(disk_region(), 0.5, {32, 0.2, 0.1}).first;
    const GridPair g = forward_grid(f);
    const auto& boundary = g.image.polylines.back();
    // oracle-run tolerance at N = 32 (error 2.0e-7)
    for (const Cx& w : boundary) CHECK(std::abs(std::abs(w) - 1.0) <= 3e-7);
}

TEST_CASE("annulus backward rays join the two boundaries") {
    const PointConfig cfg{32, 0.06, 0.03};
    const ExactMapCase ex = frame_case(2.0 * std::sqrt(14.0), 7.0, 2.0, 1.0);
    const auto [f, fr] = build_forward(ex.region, ex.z0, cfg);
    const auto [b, br] = build_backward(boundary_correspondence(f), cfg, canonical_of(f));
    const GridPair g = backward_grid(b);
    const auto outer = [&](Cx z) { return std::abs(z * z - 49.0) - 56.0; };
    const auto inner = [&](Cx z) { return std::abs(z * z - 1.0) - 4.0; };
    int rays = 0;
    for (const auto& line : g.image.polylines) {
        if (line.front() == line.back()) continue;
        ++rays;
        CHECK(std::abs(inner(line.front())) < 0.02 * 4.0);
        CHECK(std::abs(outer(line.back())) < 0.02 * 56.0);
    }
    CHECK(rays == 16);
}

TEST_CASE("grid JSON round trip and SVG") {
    GridImage g;
    g.role = GridRole::image;
    g.polylines = {{Cx(0.1, 0.2), Cx(1.0 / 3.0, -2.5)}, {Cx(0, 0), Cx(1, 1), Cx(2, 0)}};
    const GridImage back = grid_from_json(to_json(g));
    CHECK(back.role == GridRole::image);
    CHECK(back.polylines == g.polylines);
    const std::string svg = to_svg(g);
    CHECK(svg.find("viewBox=\"0 0 1 1\"") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK_THROWS(grid_from_json(R"({"role":"other","polylines":[]})"));
}

TEST_CASE("sweep CSV") {
    const auto recs = run_sweep(disk_config());
    const std::string csv = sweep_csv(recs);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == kSweepCsvHeader);
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find(",,,") == std::string::npos);
    }
    CHECK(rows == 3);
    CHECK(*recs[1].err_forward < *recs[0].err_forward);
    CHECK(*recs[2].err_forward < *recs[1].err_forward);
    // bit-stable
    CHECK(sweep_csv(run_sweep(disk_config())) == csv);

    ConvergenceRecord failed;
    failed.N = 12;
    failed.failure = "boom";
    const std::vector<ConvergenceRecord> one{failed};
    CHECK(sweep_csv(one) == std::string(kSweepCsvHeader) + "\n12,,,,,,,\n");
}

TEST_CASE("no-oracle sweep leaves error columns empty") {
    auto cfg = disk_config();
    cfg.z0 = 0.0;
    cfg.region = parse_config_text(
                     R"({"region":{"kind":"cassini_oval","a":1.3},"z0":[0,0],"N_list":[8],"rtilde_f":0.06,"rtilde_b":0.04})")
                     .region;
    cfg.z0 = Cx(0.2, 0.1);
    cfg.rtilde_f = 0.06;
    cfg.rtilde_b = 0.04;
    const auto recs = run_sweep(cfg);
    const std::string csv = sweep_csv(recs);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line.rfind("8,,,,", 0) == 0);
    CHECK(recs[0].residual_f.has_value());
}

TEST_CASE("frame sweep populates the modulus column") {
    const auto cfg = parse_config_text(
        R"({"region":{"kind":"cassini_frame","a1":7.4833147735478827,"b1":7,"a2":2,"b2":1},"z0":[0,0],)"
        R"("N_list":[16,24],"rtilde_f":0.06,"rtilde_b":0.03})");
    for (const auto& r : run_sweep(cfg)) CHECK(r.err_modulus.has_value());
}

TEST_CASE("run writes files") {
    const auto dir = std::filesystem::temp_directory_path() / "confmap_runner_test";
    std::filesystem::remove_all(dir);
    const auto out = run(disk_config(), dir, {true, true, true});
    CHECK(std::filesystem::exists(dir / "sweep.csv"));
    CHECK_FALSE(std::filesystem::exists(dir / "sweep.log"));
    for (const char* name : {"forward_preimage", "forward_image", "backward_preimage", "backward_image"}) {
        CHECK(std::filesystem::exists(dir / (std::string(name) + ".json")));
        CHECK(std::filesystem::exists(dir / (std::string(name) + ".svg")));
        const GridImage g = grid_from_json(slurp(dir / (std::string(name) + ".json")));
        for (const auto& line : g.polylines)
            for (const Cx& z : line) CHECK((std::isfinite(z.real()) && std::isfinite(z.imag())));
    }
    CHECK(out.warnings.empty());
    std::filesystem::remove_all(dir);
}
