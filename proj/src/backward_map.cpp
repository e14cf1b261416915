#include "confmap/backward_map.hpp"

#include <cmath>
#include <sstream>

#include "confmap/error.hpp"

namespace confmap {

namespace {

bool pole_ok(Cx xi, bool outer, double inner_radius) {
    return outer ? std::abs(xi) > 1.0 : std::abs(xi) < inner_radius;
}

std::vector<Cx> place_poles(std::span<const Cx> w, double r, bool outer, double inner_radius,
                            std::size_t group) {
    std::vector<Cx> poles = amano_singular(w, r);
    std::size_t good = 0;
    for (const Cx& xi : poles) good += pole_ok(xi, outer, inner_radius) ? 1 : 0;
    if (2 * good < poles.size()) poles = amano_singular(w, -r);
    for (std::size_t k = 0; k < poles.size(); ++k) {
        if (!pole_ok(poles[k], outer, inner_radius)) {
            std::ostringstream msg;
            msg << "pole " << k + 1 << " of group " << group << " at " << poles[k]
                << " is on the wrong side of the canonical boundary";
            throw ArrangementError(msg.str());
        }
    }
    return poles;
}

}  // namespace

Canonical canonical_of(const ForwardMap& map) {
    if (map.moduli().empty()) return Canonical::disk();
    const auto hole = map.region().hole_containing(map.z0());
    return Canonical::annulus(map.moduli().at(hole.value() - 1));
}

BackwardMap::BackwardMap(std::vector<Cx> poles, std::vector<Cx> coeffs, Canonical canonical,
                         std::vector<std::size_t> groups)
    : poles_(std::move(poles)),
      coeffs_(std::move(coeffs)),
      canonical_(canonical),
      groups_(std::move(groups)) {
    if (poles_.size() != coeffs_.size()) throw Error("backward map: poles/coefficients mismatch");
    std::size_t k = 0;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        for (std::size_t i = 0; i < groups_[g]; ++i, ++k) {
            if (!pole_ok(poles_.at(k), g == 0, canonical_.inner_radius)) {
                std::ostringstream msg;
                msg << "backward map pole " << k + 1 << " violates its side invariant";
                throw ArrangementError(msg.str());
            }
        }
    }
}

Cx BackwardMap::eval(Cx w) const {
    Cx acc = 0.0;
    for (std::size_t k = 0; k < poles_.size(); ++k) {
        if (w == poles_[k]) {
            std::ostringstream msg;
            msg << "backward map evaluated at pole " << poles_[k];
            throw SingularKernelError(msg.str());
        }
        acc += coeffs_[k] / (w - poles_[k]);
    }
    return acc;
}

ComplexMatrix cdsm_assemble(std::span<const Cx> colloc_w, std::span<const Cx> poles) {
    ComplexMatrix g(static_cast<Eigen::Index>(colloc_w.size()), static_cast<Eigen::Index>(poles.size()));
    for (std::size_t j = 0; j < colloc_w.size(); ++j) {
        for (std::size_t k = 0; k < poles.size(); ++k) {
            if (colloc_w[j] == poles[k]) {
                std::ostringstream msg;
                msg << "cdsm_assemble: collocation point " << j + 1 << " coincides with pole " << k + 1;
                throw SingularKernelError(msg.str());
            }
            g(j, k) = 1.0 / (colloc_w[j] - poles[k]);
        }
    }
    return g;
}

std::pair<BackwardMap, SolveReport> build_backward(const BoundaryCorrespondence& corr,
                                                   const PointConfig& config, Canonical canonical) {
    const std::size_t groups = corr.w.size();
    if (groups == 0 || groups != corr.z.size())
        throw Error("build_backward: malformed boundary correspondence");
    if (groups > 2) throw UnsupportedError("backward maps are implemented for connectivity <= 2");
    if ((groups == 2) != canonical.is_annulus())
        throw Error("build_backward: canonical region does not match the correspondence");

    std::vector<Cx> w_all, z_all, poles;
    std::vector<std::size_t> sizes;
    for (std::size_t g = 0; g < groups; ++g) {
        if (corr.w[g].size() != static_cast<std::size_t>(config.N) || corr.z[g].size() != corr.w[g].size())
            throw Error("build_backward: correspondence size does not match N");
        const double r = config.rtilde_b * config.N;
        auto xi = place_poles(corr.w[g], r, g == 0, canonical.inner_radius, g);
        poles.insert(poles.end(), xi.begin(), xi.end());
        w_all.insert(w_all.end(), corr.w[g].begin(), corr.w[g].end());
        z_all.insert(z_all.end(), corr.z[g].begin(), corr.z[g].end());
        sizes.push_back(xi.size());
    }

    const ComplexMatrix a = cdsm_assemble(w_all, poles);
    const ComplexVector b =
        Eigen::Map<const ComplexVector>(z_all.data(), static_cast<Eigen::Index>(z_all.size()));
    const auto sol = solve_dense<Cx>(a, b);

    BackwardMap map(std::move(poles), std::vector<Cx>(sol.x.data(), sol.x.data() + sol.x.size()),
                    canonical, std::move(sizes));
    SolveReport report;
    report.cond_estimate = sol.cond_estimate;
    report.least_squares = sol.least_squares;
    for (std::size_t j = 0; j < w_all.size(); ++j)
        report.residual_inf = std::max(report.residual_inf, std::abs(map.eval(w_all[j]) - z_all[j]));
    return {std::move(map), report};
}

}  // namespace confmap
