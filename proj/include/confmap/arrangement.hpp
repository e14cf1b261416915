#pragma once

#include <functional>
#include <span>
#include <vector>

#include "confmap/geometry.hpp"

namespace confmap {

/// Points per boundary component and the scaled offsets r~ (actual offset r = r~ * N).
struct PointConfig {
    int N = 32;
    double rtilde_f = 0.2;
    double rtilde_b = 0.1;
};

/// Collocation points, singular points and unit dipole moments for one boundary component.
struct ArrangedSet {
    std::vector<Cx> colloc;
    std::vector<Cx> singular;
    std::vector<Cx> moments;
};

enum class Side { exterior, interior };

/// z_j = curve.param(j / N) for j = 1..N (stored at index j - 1).
std::vector<Cx> collocation_points(const BoundaryCurve& curve, int N);

/// zeta_k = z_k - (i r / 2)(z_{k+1} - z_{k-1}) with cyclic neighbours.
/// Positive r pushes outward from a positively oriented polygon.
std::vector<Cx> amano_singular(std::span<const Cx> colloc, double r);

/// n_k = -i (zeta_{k+1} - zeta_{k-1}) / |zeta_{k+1} - zeta_{k-1}|.
/// Throws ArrangementError when zeta_{k+1} == zeta_{k-1}.
std::vector<Cx> amano_moments(std::span<const Cx> singular);

/// Full arrangement for one component with r = rtilde * N. The sign of r is
/// picked so the singular points land on `side` of the curve; every point is
/// then checked and the first offending index is reported on failure.
ArrangedSet arrange_component(const BoundaryCurve& curve, int N, double rtilde, Side side);

/// zeta_k = psi(R exp(2 pi i k / N)), k = 1..N.
std::vector<Cx> conformal_singular(const std::function<Cx(Cx)>& psi, double R, int N);

}  // namespace confmap
