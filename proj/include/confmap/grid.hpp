#pragma once

#include <string>
#include <utility>
#include <vector>

#include "confmap/backward_map.hpp"
#include "confmap/forward_map.hpp"
#include "confmap/geometry.hpp"

namespace confmap {

enum class GridRole { preimage, image };

/// Polylines of a mapped grid. JSON form:
///   {"role": "preimage" | "image", "polylines": [[[re, im], ...], ...]}
struct GridImage {
    GridRole role = GridRole::preimage;
    std::vector<std::vector<Cx>> polylines;
};

struct GridPair {
    GridImage preimage;
    GridImage image;
};

/// Cartesian lines clipped to the region plus the boundary curves, and their
/// images under the forward map.
GridPair forward_grid(const ForwardMap& map, int lines = 16, int samples = 200);

/// Concentric circles and rays of the canonical region (including its
/// boundary circles), and their images under the backward map.
GridPair backward_grid(const BackwardMap& map, int circles = 8, int rays = 16, int samples = 200);

std::string to_json(const GridImage& grid);
GridImage grid_from_json(const std::string& text);

/// Polyline rendering in a unit view box (the drawing is scaled to fit).
std::string to_svg(const GridImage& grid);

}  // namespace confmap
