#include "confmap/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "confmap/error.hpp"

namespace confmap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kValidationSamples = 256;

bool finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

BoundaryCurve::BoundaryCurve(Map param, Map deriv, Orientation orientation)
    : param_(std::move(param)), deriv_(std::move(deriv)), orientation_(orientation) {
    if (!param_ || !deriv_) throw GeometryError("boundary curve needs both param and deriv");

    const Cx start = param_(0.0);
    const Cx end = param_(1.0);
    if (!finite(start) || std::abs(start - end) > 1e-12 * (1.0 + std::abs(start)))
        throw GeometryError("boundary curve is not closed: param(0) != param(1)");

    std::vector<Cx> pts(kValidationSamples);
    for (std::size_t j = 0; j < kValidationSamples; ++j) {
        const double tau = static_cast<double>(j) / kValidationSamples;
        pts[j] = param_(tau);
        const Cx d = deriv_(tau);
        if (!finite(pts[j]) || !finite(d))
            throw GeometryError("boundary curve evaluates to a non-finite value");
        if (std::abs(d) == 0.0) {
            std::ostringstream msg;
            msg << "boundary curve is not regular at tau=" << tau;
            throw GeometryError(msg.str());
        }
    }
    const double area = signed_area(pts);
    if (area == 0.0) throw GeometryError("boundary curve encloses no area");
    if ((area > 0.0) != (orientation_ == Orientation::positive))
        throw GeometryError("boundary curve orientation does not match its enclosed area");
}

std::vector<Cx> BoundaryCurve::sample(std::size_t m, double shift) const {
    std::vector<Cx> out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = param_((static_cast<double>(j) + shift) / m);
    return out;
}

BoundaryCurve BoundaryCurve::reversed() const {
    auto p = param_;
    auto d = deriv_;
    return BoundaryCurve([p](double t) { return p(1.0 - t); },
                         [d](double t) { return -d(1.0 - t); },
                         orientation_ == Orientation::positive ? Orientation::negative
                                                               : Orientation::positive);
}

BoundaryCurve circle(Cx center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw GeometryError("circle radius must be positive");
    return BoundaryCurve(
        [=](double t) { return center + radius * std::polar(1.0, kTwoPi * t); },
        [=](double t) { return Cx(0.0, kTwoPi * radius) * std::polar(1.0, kTwoPi * t); });
}

BoundaryCurve cassini_oval(double a, double scale) {
    if (!(a > 1.0) || !std::isfinite(a))
        throw GeometryError("cassini_oval requires a > 1 (single-loop regime)");
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw GeometryError("cassini_oval scale must be positive");
    const double a4 = a * a * a * a;
    auto radius = [a4](double phi) {
        const double s = std::sin(2.0 * phi);
        return std::sqrt(std::cos(2.0 * phi) + std::sqrt(a4 - s * s));
    };
    auto param = [=](double t) {
        const double phi = kTwoPi * t;
        return scale * radius(phi) * std::polar(1.0, phi);
    };
    auto deriv = [=](double t) {
        const double phi = kTwoPi * t;
        const double s = std::sin(2.0 * phi);
        const double c = std::cos(2.0 * phi);
        const double r = radius(phi);
        const double dr = -s * (1.0 + c / std::sqrt(a4 - s * s)) / r;
        return kTwoPi * scale * Cx(dr, r) * std::polar(1.0, phi);
    };
    return BoundaryCurve(param, deriv);
}

double winding_number(std::span<const Cx> polygon, Cx p) {
    double total = 0.0;
    const std::size_t m = polygon.size();
    for (std::size_t j = 0; j < m; ++j) {
        const Cx a = polygon[j] - p;
        const Cx b = polygon[(j + 1) % m] - p;
        total += std::arg(b / a);
    }
    return total / kTwoPi;
}

double signed_area(std::span<const Cx> polygon) {
    double total = 0.0;
    const std::size_t m = polygon.size();
    for (std::size_t j = 0; j < m; ++j) {
        const Cx a = polygon[j];
        const Cx b = polygon[(j + 1) % m];
        total += a.real() * b.imag() - b.real() * a.imag();
    }
    return total;
}

namespace {

bool near_polygon(std::span<const Cx> polygon, Cx z, double tol) {
    for (const Cx& q : polygon)
        if (std::abs(q - z) <= tol) return true;
    return false;
}

bool inside_polygon(std::span<const Cx> polygon, Cx z) {
    return std::lround(winding_number(polygon, z)) != 0;
}

}  // namespace

Region::Region(std::vector<BoundaryCurve> components) : components_(std::move(components)) {
    if (components_.empty()) throw GeometryError("region needs at least one boundary component");
    for (const auto& c : components_)
        if (c.orientation() != Orientation::positive)
            throw GeometryError("region components must be positively oriented");

    samples_.reserve(components_.size());
    for (const auto& c : components_) samples_.push_back(c.sample(kLocateSamples));

    for (std::size_t i = 1; i < components_.size(); ++i) {
        for (const Cx& z : samples_[i]) {
            if (!inside_polygon(samples_[0], z) || near_polygon(samples_[0], z, kBoundaryTolerance)) {
                std::ostringstream msg;
                msg << "hole " << i << " is not strictly inside the outer boundary";
                throw GeometryError(msg.str());
            }
        }
        for (std::size_t j = 1; j < components_.size(); ++j) {
            if (j == i) continue;
            for (const Cx& z : samples_[i]) {
                if (inside_polygon(samples_[j], z)) {
                    std::ostringstream msg;
                    msg << "holes " << i << " and " << j << " overlap";
                    throw GeometryError(msg.str());
                }
            }
        }
    }
}

Location Region::locate(Cx z) const {
    for (const auto& s : samples_)
        if (near_polygon(s, z, kBoundaryTolerance)) return Location::boundary;
    if (!inside_polygon(samples_[0], z)) return Location::exterior;
    for (std::size_t i = 1; i < samples_.size(); ++i)
        if (inside_polygon(samples_[i], z)) return Location::exterior;
    return Location::interior;
}

std::optional<std::size_t> Region::hole_containing(Cx z) const {
    for (std::size_t i = 1; i < samples_.size(); ++i)
        if (!near_polygon(samples_[i], z, kBoundaryTolerance) && inside_polygon(samples_[i], z))
            return i;
    return std::nullopt;
}

bool contains(const Region& region, Cx z) {
    switch (region.locate(z)) {
        case Location::interior: return true;
        case Location::exterior: return false;
        case Location::boundary: break;
    }
    std::ostringstream msg;
    msg << "point " << z << " is within " << Region::kBoundaryTolerance
        << " of the boundary; location is ambiguous";
    throw GeometryError(msg.str());
}

Region disk_region(Cx center, double radius) { return Region({circle(center, radius)}); }

Region annulus_region(double inner_radius) {
    if (!(inner_radius > 0.0 && inner_radius < 1.0))
        throw GeometryError("annulus inner radius must lie in (0, 1)");
    return Region({circle(0.0, 1.0), circle(0.0, inner_radius)});
}

Region cassini_oval_region(double a) { return Region({cassini_oval(a)}); }

Region cassini_frame_region(double a1, double b1, double a2, double b2) {
    if (!(b1 > 0.0 && b2 > 0.0)) throw GeometryError("cassini frame needs b1, b2 > 0");
    if (!(a1 / b1 > 1.0 && a2 / b2 > 1.0))
        throw GeometryError("cassini frame needs a1/b1 > 1 and a2/b2 > 1");
    return Region({cassini_oval(a1 / b1, b1), cassini_oval(a2 / b2, b2)});
}

}  // namespace confmap
