#include "confmap/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "confmap/error.hpp"

namespace confmap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::vector<Cx>> map_polylines(const std::vector<std::vector<Cx>>& in,
                                           const std::function<Cx(Cx)>& f) {
    std::vector<std::vector<Cx>> out;
    out.reserve(in.size());
    for (const auto& line : in) {
        std::vector<Cx> mapped(line.size());
        for (std::size_t i = 0; i < line.size(); ++i) {
            mapped[i] = f(line[i]);
            if (!std::isfinite(mapped[i].real()) || !std::isfinite(mapped[i].imag()))
                throw Error("grid image has a non-finite point");
        }
        out.push_back(std::move(mapped));
    }
    return out;
}

std::vector<Cx> closed_sample(const BoundaryCurve& c, int samples) {
    std::vector<Cx> pts = c.sample(static_cast<std::size_t>(samples));
    pts.push_back(pts.front());
    return pts;
}

}  // namespace

GridPair forward_grid(const ForwardMap& map, int lines, int samples) {
    const Region& region = map.region();
    const auto& outer = region.samples(0);
    double x0 = outer[0].real(), x1 = x0, y0 = outer[0].imag(), y1 = y0;
    for (const Cx& z : outer) {
        x0 = std::min(x0, z.real());
        x1 = std::max(x1, z.real());
        y0 = std::min(y0, z.imag());
        y1 = std::max(y1, z.imag());
    }

    GridPair grid;
    auto& pre = grid.preimage.polylines;
    auto clip_line = [&](Cx from, Cx to) {
        std::vector<Cx> run;
        for (int i = 0; i <= samples; ++i) {
            const Cx z = from + (to - from) * (static_cast<double>(i) / samples);
            if (region.locate(z) == Location::interior) {
                run.push_back(z);
            } else {
                if (run.size() >= 2) pre.push_back(run);
                run.clear();
            }
        }
        if (run.size() >= 2) pre.push_back(run);
    };
    for (int i = 1; i <= lines; ++i) {
        const double t = static_cast<double>(i) / (lines + 1);
        const double x = x0 + t * (x1 - x0);
        const double y = y0 + t * (y1 - y0);
        clip_line({x, y0}, {x, y1});
        clip_line({x0, y}, {x1, y});
    }
    for (const auto& c : region.components()) pre.push_back(closed_sample(c, 4 * samples));

    grid.preimage.role = GridRole::preimage;
    grid.image.role = GridRole::image;
    grid.image.polylines = map_polylines(pre, [&](Cx z) { return map.eval(z); });
    return grid;
}

GridPair backward_grid(const BackwardMap& map, int circles, int rays, int samples) {
    const double r_in = map.canonical().inner_radius;
    GridPair grid;
    auto& pre = grid.preimage.polylines;
    for (int i = 1; i <= circles; ++i) {
        const double r = r_in + (1.0 - r_in) * static_cast<double>(i) / circles;
        pre.push_back(closed_sample(circle(0.0, r), 4 * samples));
    }
    if (map.canonical().is_annulus()) pre.push_back(closed_sample(circle(0.0, r_in), 4 * samples));
    for (int k = 0; k < rays; ++k) {
        const Cx dir = std::polar(1.0, kTwoPi * k / rays);
        std::vector<Cx> ray;
        for (int i = 0; i <= samples; ++i)
            ray.push_back(dir * (r_in + (1.0 - r_in) * static_cast<double>(i) / samples));
        pre.push_back(std::move(ray));
    }
    grid.preimage.role = GridRole::preimage;
    grid.image.role = GridRole::image;
    grid.image.polylines = map_polylines(pre, [&](Cx w) { return map.eval(w); });
    return grid;
}

std::string to_json(const GridImage& grid) {
    std::ostringstream o;
    o << "{\"role\":\"" << (grid.role == GridRole::preimage ? "preimage" : "image") << "\",\"polylines\":[";
    for (std::size_t i = 0; i < grid.polylines.size(); ++i) {
        o << (i ? "," : "") << "[";
        const auto& line = grid.polylines[i];
        for (std::size_t j = 0; j < line.size(); ++j)
            o << (j ? "," : "") << "[" << num(line[j].real()) << "," << num(line[j].imag()) << "]";
        o << "]";
    }
    o << "]}";
    return o.str();
}

GridImage grid_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    GridImage grid;
    const std::string role = j.at("role").get<std::string>();
    if (role == "preimage")
        grid.role = GridRole::preimage;
    else if (role == "image")
        grid.role = GridRole::image;
    else
        throw ConfigError("grid.role: expected 'preimage' or 'image'");
    for (const auto& line : j.at("polylines")) {
        std::vector<Cx> pts;
        for (const auto& p : line) pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        grid.polylines.push_back(std::move(pts));
    }
    return grid;
}

std::string to_svg(const GridImage& grid) {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    bool first = true;
    for (const auto& line : grid.polylines) {
        for (const Cx& z : line) {
            if (first) {
                x0 = x1 = z.real();
                y0 = y1 = z.imag();
                first = false;
            }
            x0 = std::min(x0, z.real());
            x1 = std::max(x1, z.real());
            y0 = std::min(y0, z.imag());
            y1 = std::max(y1, z.imag());
        }
    }
    const double span = std::max({x1 - x0, y1 - y0, 1e-300});
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" width=\"512\" height=\"512\">\n";
    for (const auto& line : grid.polylines) {
        o << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.002\" points=\"";
        for (std::size_t j = 0; j < line.size(); ++j) {
            // y axis points down in SVG
            o << (j ? " " : "") << num((line[j].real() - x0) / span) << ","
              << num((y1 - line[j].imag()) / span);
        }
        o << "\"/>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace confmap
