#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confmap/geometry.hpp"
#include "confmap/reference.hpp"

namespace confmap {

enum class RegionKind { disk, annulus, cassini_oval, cassini_frame };

/// Region description as it appears under the "region" key of a run config:
///   {"kind": "disk", "center": [re, im], "radius": r}   (center/radius optional)
///   {"kind": "annulus", "rho": rho}
///   {"kind": "cassini_oval", "a": a}
///   {"kind": "cassini_frame", "a1": .., "b1": .., "a2": .., "b2": ..}
struct RegionSpec {
    RegionKind kind = RegionKind::disk;
    std::map<std::string, double> params;
    Cx center = 0.0;
};

struct OutputFlags {
    bool csv = true;
    bool grid_json = false;
    bool svg = false;
};

struct RunConfig {
    RegionSpec region;
    Cx z0 = 0.0;
    std::vector<int> N_list;
    double rtilde_f = 0.0;
    double rtilde_b = 0.0;
    double s = 1.0;
    int M_factor = 16;
    OutputFlags outputs;
};

/// Parses and validates a JSON run config. Unknown keys are rejected; errors
/// are ConfigError with the offending field path in the message.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config(const std::filesystem::path& path);

/// Inverse of parse_config_text (numbers written with 17 significant digits).
std::string config_to_json(const RunConfig& config);

std::string to_string(RegionKind kind);

Region make_region(const RegionSpec& spec);

/// Closed-form oracle for the configured region and base point, when one exists:
/// unit disk (any z0), Cassini oval, frame or annulus with z0 = 0.
std::optional<ExactMapCase> make_exact_case(const RegionSpec& spec, Cx z0);

}  // namespace confmap
