#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "confmap/arrangement.hpp"
#include "confmap/forward_map.hpp"
#include "confmap/geometry.hpp"
#include "confmap/linalg.hpp"
#include "confmap/potential.hpp"

namespace confmap {

/// Canonical target: the unit disk (inner_radius == 0) or the annulus inner_radius < |w| < 1.
struct Canonical {
    double inner_radius = 0.0;

    static Canonical disk() { return {}; }
    static Canonical annulus(double r) { return {r}; }
    bool is_annulus() const { return inner_radius > 0.0; }
};

/// Canonical region of a built forward map.
Canonical canonical_of(const ForwardMap& map);

/// Rational approximation f*(w) = sum_k Q_k / (w - xi_k) with complex Q_k.
/// Poles of group 0 lie outside the unit circle; for an annulus, poles of
/// group 1 lie inside the inner circle.
class BackwardMap {
public:
    BackwardMap(std::vector<Cx> poles, std::vector<Cx> coeffs, Canonical canonical,
                std::vector<std::size_t> groups);

    Cx eval(Cx w) const;
    Cx operator()(Cx w) const { return eval(w); }

    const std::vector<Cx>& poles() const { return poles_; }
    const std::vector<Cx>& coeffs() const { return coeffs_; }
    const Canonical& canonical() const { return canonical_; }
    const std::vector<std::size_t>& groups() const { return groups_; }

private:
    std::vector<Cx> poles_;
    std::vector<Cx> coeffs_;
    Canonical canonical_;
    std::vector<std::size_t> groups_;
};

/// G[j][k] = 1 / (w_j - xi_k).
ComplexMatrix cdsm_assemble(std::span<const Cx> colloc_w, std::span<const Cx> poles);

/// Collocates f*(w_j) = z_j at the computed images w_j. Poles are placed by
/// Amano's rule on the w polygon with r = rtilde_b * N, outward from the unit
/// circle and inward from the inner circle. The report's residual is
/// max_j |f*(w_j) - z_j|.
std::pair<BackwardMap, SolveReport> build_backward(const BoundaryCorrespondence& corr,
                                                   const PointConfig& config, Canonical canonical);

}  // namespace confmap
