#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "confmap/arrangement.hpp"
#include "confmap/geometry.hpp"
#include "confmap/potential.hpp"

namespace confmap {

/// Extra equations closing the multiply connected system. Only the choice
/// sum_k Q_{nu k} = 0 for every hole is implemented.
enum class SideCondition { amano_compatible };

/// f(z) = (z - z0) exp[g(z) + i h(z)] with g a DSM potential and h its
/// conjugate shifted so that h(z0) = 0.
class ForwardMap {
public:
    ForwardMap(Region region, Cx z0, ChargeSystem charges, std::vector<double> moduli,
               std::vector<std::vector<Cx>> colloc);

    Cx eval(Cx z) const;
    Cx operator()(Cx z) const { return eval(z); }
    double g(Cx z) const;
    double h(Cx z) const;

    Cx z0() const { return z0_; }
    const ChargeSystem& charges() const { return charges_; }
    double h_offset() const { return h_offset_; }
    /// R_mu for each hole, in region order (empty when simply connected).
    const std::vector<double>& moduli() const { return moduli_; }
    const Region& region() const { return region_; }
    /// Collocation points per boundary component.
    const std::vector<std::vector<Cx>>& collocation() const { return colloc_; }
    int N() const { return static_cast<int>(colloc_.front().size()); }

private:
    Region region_;
    Cx z0_;
    ChargeSystem charges_;
    double h_offset_ = 0.0;
    std::vector<double> moduli_;
    std::vector<std::vector<Cx>> colloc_;
};

/// Image of the collocation points of each boundary component.
struct BoundaryCorrespondence {
    std::vector<std::vector<Cx>> z;
    std::vector<std::vector<Cx>> w;
};

/// rhs_j = -log|z_j - z0|.
std::vector<double> dirichlet_data_simply(Cx z0, std::span<const Cx> colloc);

std::pair<ForwardMap, SolveReport> build_forward_simply(const Region& region, Cx z0,
                                                        const PointConfig& config);

/// Solves for the coefficients and lambda_mu = log R_mu simultaneously:
///   g(z_{0j}) = -log|z_{0j} - z0|               (outer boundary)
///   g(z_{mu j}) - lambda_mu = -log|z_{mu j} - z0| (hole mu)
///   sum_k Q_{mu k} = 0                           (hole mu)
/// z0 must lie inside one of the holes; that hole maps to the innermost circle.
std::pair<ForwardMap, SolveReport> build_forward_multiply(
    const Region& region, Cx z0, const PointConfig& config,
    SideCondition side = SideCondition::amano_compatible);

/// Dispatches on the region's connectivity.
std::pair<ForwardMap, SolveReport> build_forward(const Region& region, Cx z0,
                                                 const PointConfig& config);

BoundaryCorrespondence boundary_correspondence(const ForwardMap& map);

}  // namespace confmap
