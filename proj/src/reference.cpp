#include "confmap/reference.hpp"

#include <cmath>
#include <sstream>

#include "confmap/error.hpp"

namespace confmap {

ExactMapCase mobius_case(Cx z0) {
    if (!(std::abs(z0) < 1.0)) throw GeometryError("mobius_case requires |z0| < 1");
    return ExactMapCase{
        "disk_mobius",
        {{"z0_re", z0.real()}, {"z0_im", z0.imag()}},
        disk_region(),
        z0,
        [z0](Cx z) { return (z - z0) / (1.0 - std::conj(z0) * z); },
        [z0](Cx w) { return (w + z0) / (1.0 + std::conj(z0) * w); },
        std::nullopt,
    };
}

ExactMapCase cassini_case(double a) {
    if (!(a > 1.0)) throw GeometryError("cassini_case requires a > 1");
    const double a2 = a * a;
    const double c = a2 * a2 - 1.0;
    const double sc = std::sqrt(c);
    return ExactMapCase{
        "cassini_oval",
        {{"a", a}},
        cassini_oval_region(a),
        0.0,
        [a, c](Cx z) { return a * z / std::sqrt(c + z * z); },
        [a2, sc](Cx w) { return sc * w / std::sqrt(a2 - w * w); },
        std::nullopt,
    };
}

ExactMapCase frame_case(double a1, double b1, double a2, double b2) {
    const double lhs = (std::pow(a1, 4) - std::pow(b1, 4)) / (b1 * b1);
    const double rhs = (std::pow(a2, 4) - std::pow(b2, 4)) / (b2 * b2);
    if (!(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), std::abs(rhs)))) {
        std::ostringstream msg;
        msg << "no exact map for this Cassini frame: (a1^4-b1^4)/b1^2 = " << lhs
            << " differs from (a2^4-b2^4)/b2^2 = " << rhs;
        throw GeometryError(msg.str());
    }
    const double c = std::pow(a1, 4) - std::pow(b1, 4);
    const double sc = std::sqrt(c);
    return ExactMapCase{
        "cassini_frame",
        {{"a1", a1}, {"b1", b1}, {"a2", a2}, {"b2", b2}},
        cassini_frame_region(a1, b1, a2, b2),
        0.0,
        [=](Cx z) { return a1 * z / std::sqrt(b1 * b1 * z * z + c); },
        [=](Cx w) { return sc * w / std::sqrt(a1 * a1 - b1 * b1 * w * w); },
        a1 * b2 / (a2 * b1),
    };
}

ExactMapCase annulus_case(double rho) {
    return ExactMapCase{
        "annulus",
        {{"rho", rho}},
        annulus_region(rho),
        0.0,
        [](Cx z) { return z; },
        [](Cx w) { return w; },
        rho,
    };
}

}  // namespace confmap
