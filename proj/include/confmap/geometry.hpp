#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace confmap {

using Cx = std::complex<double>;

enum class Orientation { positive, negative };

/// Closed, regular curve parameterized over tau in [0, 1).
///
/// Construction checks closedness (|param(0) - param(1)| <= 1e-12 relative),
/// nonvanishing derivative on a sample set, and that the stated orientation
/// agrees with the sign of the enclosed area.
class BoundaryCurve {
public:
    using Map = std::function<Cx(double)>;

    BoundaryCurve(Map param, Map deriv, Orientation orientation = Orientation::positive);

    Cx param(double tau) const { return param_(tau); }
    Cx deriv(double tau) const { return deriv_(tau); }
    Cx operator()(double tau) const { return param_(tau); }
    Orientation orientation() const { return orientation_; }

    /// Points param((j + shift) / m) for j = 0..m-1.
    std::vector<Cx> sample(std::size_t m, double shift = 0.0) const;

    /// Same curve traversed in the opposite direction.
    BoundaryCurve reversed() const;

private:
    Map param_;
    Map deriv_;
    Orientation orientation_;
};

/// center + radius * exp(2 pi i tau).
BoundaryCurve circle(Cx center, double radius);

/// Cassini oval |z^2 - scale^2| = (a * scale)^2 in polar form
/// z = scale * r(phi) * exp(i phi), r(phi)^2 = cos 2phi + sqrt(a^4 - sin^2 2phi).
/// Requires a > 1 so the level set is a single loop.
BoundaryCurve cassini_oval(double a, double scale = 1.0);

/// Discrete winding number of a closed polygon about p (sum of argument increments / 2 pi).
double winding_number(std::span<const Cx> polygon, Cx p);

/// Twice the signed area enclosed by a closed polygon (positive for counterclockwise).
double signed_area(std::span<const Cx> polygon);

enum class Location { interior, exterior, boundary };

/// Simply or multiply connected region. Component 0 is the outer boundary,
/// components 1..n-1 bound the holes. Every stored curve is positively oriented.
class Region {
public:
    static constexpr std::size_t kLocateSamples = 4096;
    static constexpr double kBoundaryTolerance = 1e-9;

    explicit Region(std::vector<BoundaryCurve> components);

    std::size_t connectivity() const { return components_.size(); }
    const std::vector<BoundaryCurve>& components() const { return components_; }
    const BoundaryCurve& component(std::size_t i) const { return components_.at(i); }
    const BoundaryCurve& outer() const { return components_.front(); }

    /// Winding-number classification on the sampled boundary.
    Location locate(Cx z) const;

    /// Index of the hole whose interior contains z, if any.
    std::optional<std::size_t> hole_containing(Cx z) const;

    /// Polygon samples used by locate().
    const std::vector<Cx>& samples(std::size_t component) const { return samples_.at(component); }

private:
    std::vector<BoundaryCurve> components_;
    std::vector<std::vector<Cx>> samples_;
};

/// True iff z lies inside the region. Throws GeometryError when z is within
/// 1e-9 of a boundary sample.
bool contains(const Region& region, Cx z);

Region disk_region(Cx center = 0.0, double radius = 1.0);
Region annulus_region(double inner_radius);
Region cassini_oval_region(double a);

/// {z : |z^2 - b1^2| < a1^2, |z^2 - b2^2| > a2^2}; requires a1/b1 > 1 and a2/b2 > 1.
Region cassini_frame_region(double a1, double b1, double a2, double b2);

}  // namespace confmap
