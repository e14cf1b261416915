#include "confmap/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "confmap/error.hpp"

namespace confmap {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) fail(path + "." + key, "unknown key");
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key)) fail(path + "." + key, "missing required field");
    return obj.at(key);
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

double as_positive(const json& v, const std::string& path) {
    const double x = as_number(v, path);
    if (!(x > 0.0)) fail(path, "must be positive");
    return x;
}

Cx as_complex(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) fail(path, "expected [re, im]");
    return {as_number(v[0], path + "[0]"), as_number(v[1], path + "[1]")};
}

bool as_bool(const json& v, const std::string& path) {
    if (!v.is_boolean()) fail(path, "expected true or false");
    return v.get<bool>();
}

RegionSpec parse_region(const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object");
    const json& kind = require(v, path, "kind");
    if (!kind.is_string()) fail(path + ".kind", "expected a string");
    const std::string k = kind.get<std::string>();

    RegionSpec spec;
    std::vector<std::string> required;
    std::set<std::string> allowed{"kind"};
    if (k == "disk") {
        spec.kind = RegionKind::disk;
        allowed.insert({"center", "radius"});
        spec.params["radius"] = v.contains("radius") ? as_positive(v["radius"], path + ".radius") : 1.0;
        if (v.contains("center")) spec.center = as_complex(v["center"], path + ".center");
    } else if (k == "annulus") {
        spec.kind = RegionKind::annulus;
        required = {"rho"};
    } else if (k == "cassini_oval") {
        spec.kind = RegionKind::cassini_oval;
        required = {"a"};
    } else if (k == "cassini_frame") {
        spec.kind = RegionKind::cassini_frame;
        required = {"a1", "b1", "a2", "b2"};
    } else {
        fail(path + ".kind", "unknown region kind '" + k + "'");
    }
    for (const auto& r : required) {
        allowed.insert(r);
        spec.params[r] = as_positive(require(v, path, r), path + "." + r);
    }
    reject_unknown(v, path, allowed);

    if (spec.kind == RegionKind::annulus && !(spec.params["rho"] < 1.0))
        fail(path + ".rho", "must lie in (0, 1)");
    if (spec.kind == RegionKind::cassini_oval && !(spec.params["a"] > 1.0))
        fail(path + ".a", "must exceed 1");
    if (spec.kind == RegionKind::cassini_frame) {
        if (!(spec.params["a1"] > spec.params["b1"])) fail(path + ".a1", "must exceed b1");
        if (!(spec.params["a2"] > spec.params["b2"])) fail(path + ".a2", "must exceed b2");
    }
    return spec;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string to_string(RegionKind kind) {
    switch (kind) {
        case RegionKind::disk: return "disk";
        case RegionKind::annulus: return "annulus";
        case RegionKind::cassini_oval: return "cassini_oval";
        case RegionKind::cassini_frame: return "cassini_frame";
    }
    return "unknown";
}

RunConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("config", std::string("invalid JSON: ") + e.what());
    }
    const std::string path = "config";
    if (!root.is_object()) fail(path, "expected a JSON object");
    reject_unknown(root, path,
                   {"region", "z0", "N_list", "rtilde_f", "rtilde_b", "s", "M_factor", "outputs"});

    RunConfig cfg;
    cfg.region = parse_region(require(root, path, "region"), path + ".region");
    cfg.z0 = as_complex(require(root, path, "z0"), path + ".z0");

    const json& nl = require(root, path, "N_list");
    if (!nl.is_array()) fail(path + ".N_list", "expected an array of integers");
    if (nl.empty()) fail(path + ".N_list", "must not be empty");
    for (std::size_t i = 0; i < nl.size(); ++i) {
        const std::string p = path + ".N_list[" + std::to_string(i) + "]";
        if (!nl[i].is_number_integer()) fail(p, "expected an integer");
        const int N = nl[i].get<int>();
        if (N < 4) fail(p, "must be at least 4");
        if (!cfg.N_list.empty() && N <= cfg.N_list.back()) fail(p, "N_list must be strictly ascending");
        cfg.N_list.push_back(N);
    }

    cfg.rtilde_f = as_positive(require(root, path, "rtilde_f"), path + ".rtilde_f");
    cfg.rtilde_b = as_positive(require(root, path, "rtilde_b"), path + ".rtilde_b");
    if (root.contains("s")) cfg.s = as_number(root["s"], path + ".s");
    if (root.contains("M_factor")) {
        const json& m = root["M_factor"];
        if (!m.is_number_integer() || m.get<int>() < 1) fail(path + ".M_factor", "expected a positive integer");
        cfg.M_factor = m.get<int>();
    }
    if (root.contains("outputs")) {
        const json& o = root["outputs"];
        const std::string op = path + ".outputs";
        if (!o.is_object()) fail(op, "expected an object");
        reject_unknown(o, op, {"csv", "grid_json", "svg"});
        if (o.contains("csv")) cfg.outputs.csv = as_bool(o["csv"], op + ".csv");
        if (o.contains("grid_json")) cfg.outputs.grid_json = as_bool(o["grid_json"], op + ".grid_json");
        if (o.contains("svg")) cfg.outputs.svg = as_bool(o["svg"], op + ".svg");
    }
    return cfg;
}

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string() + ": cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string config_to_json(const RunConfig& c) {
    // Built by hand so numbers keep 17 significant digits.
    std::ostringstream o;
    o << "{\"region\":{\"kind\":\"" << to_string(c.region.kind) << "\"";
    for (const auto& [k, v] : c.region.params) o << ",\"" << k << "\":" << num(v);
    if (c.region.kind == RegionKind::disk)
        o << ",\"center\":[" << num(c.region.center.real()) << "," << num(c.region.center.imag()) << "]";
    o << "},\"z0\":[" << num(c.z0.real()) << "," << num(c.z0.imag()) << "],\"N_list\":[";
    for (std::size_t i = 0; i < c.N_list.size(); ++i) o << (i ? "," : "") << c.N_list[i];
    o << "],\"rtilde_f\":" << num(c.rtilde_f) << ",\"rtilde_b\":" << num(c.rtilde_b)
      << ",\"s\":" << num(c.s) << ",\"M_factor\":" << c.M_factor << ",\"outputs\":{\"csv\":"
      << (c.outputs.csv ? "true" : "false") << ",\"grid_json\":" << (c.outputs.grid_json ? "true" : "false")
      << ",\"svg\":" << (c.outputs.svg ? "true" : "false") << "}}";
    return o.str();
}

Region make_region(const RegionSpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case RegionKind::disk: return disk_region(spec.center, p.at("radius"));
        case RegionKind::annulus: return annulus_region(p.at("rho"));
        case RegionKind::cassini_oval: return cassini_oval_region(p.at("a"));
        case RegionKind::cassini_frame:
            return cassini_frame_region(p.at("a1"), p.at("b1"), p.at("a2"), p.at("b2"));
    }
    throw ConfigError("unknown region kind");
}

std::optional<ExactMapCase> make_exact_case(const RegionSpec& spec, Cx z0) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case RegionKind::disk:
            if (spec.center != Cx(0.0) || p.at("radius") != 1.0 || !(std::abs(z0) < 1.0)) return std::nullopt;
            return mobius_case(z0);
        case RegionKind::annulus:
            if (z0 != Cx(0.0)) return std::nullopt;
            return annulus_case(p.at("rho"));
        case RegionKind::cassini_oval:
            if (z0 != Cx(0.0)) return std::nullopt;
            return cassini_case(p.at("a"));
        case RegionKind::cassini_frame:
            if (z0 != Cx(0.0)) return std::nullopt;
            try {
                return frame_case(p.at("a1"), p.at("b1"), p.at("a2"), p.at("b2"));
            } catch (const GeometryError&) {
                return std::nullopt;
            }
    }
    return std::nullopt;
}

}  // namespace confmap
