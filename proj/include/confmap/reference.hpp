#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "confmap/geometry.hpp"

namespace confmap {

/// Closed-form forward and backward maps for a test region. The forward map
/// sends the region onto the unit disk (or the annulus modulus < |w| < 1) with
/// f(z0) = 0, f'(z0) > 0.
struct ExactMapCase {
    std::string name;
    std::map<std::string, double> params;
    Region region;
    Cx z0;
    std::function<Cx(Cx)> forward;
    std::function<Cx(Cx)> backward;
    std::optional<double> modulus;
};

/// Moebius automorphism of the unit disk, f(z) = (z - z0) / (1 - conj(z0) z).
ExactMapCase mobius_case(Cx z0);

/// Cassini oval |z + 1||z - 1| < a^2 with base point 0:
/// f(z) = a z / sqrt(a^4 - 1 + z^2), f*(w) = sqrt(a^4 - 1) w / sqrt(a^2 - w^2).
ExactMapCase cassini_case(double a);

/// Cassini frame between |z^2 - b1^2| = a1^2 and |z^2 - b2^2| = a2^2, base point 0.
/// Requires (a1^4 - b1^4)/b1^2 == (a2^4 - b2^4)/b2^2 to relative 1e-12.
ExactMapCase frame_case(double a1, double b1, double a2, double b2);

/// Concentric annulus rho < |z| < 1; identity map with modulus rho.
ExactMapCase annulus_case(double rho);

}  // namespace confmap
