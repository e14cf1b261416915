#include "confmap/forward_map.hpp"

#include <cmath>
#include <sstream>

#include "confmap/error.hpp"

namespace confmap {

ForwardMap::ForwardMap(Region region, Cx z0, ChargeSystem charges, std::vector<double> moduli,
                       std::vector<std::vector<Cx>> colloc)
    : region_(std::move(region)),
      z0_(z0),
      charges_(std::move(charges)),
      moduli_(std::move(moduli)),
      colloc_(std::move(colloc)) {
    if (charges_.kernel != KernelKind::dsm) throw UnsupportedError("forward maps use the DSM kernel");
    if (colloc_.empty()) throw Error("forward map needs collocation points");
    h_offset_ = eval_conjugate(charges_, z0_);
}

double ForwardMap::g(Cx z) const { return eval_potential(charges_, z); }

double ForwardMap::h(Cx z) const { return eval_conjugate(charges_, z) - h_offset_; }

Cx ForwardMap::eval(Cx z) const {
    if (z == z0_) return 0.0;
    const Cx F = eval_complex(charges_, z);
    return (z - z0_) * std::exp(Cx(F.real(), F.imag() - h_offset_));
}

std::vector<double> dirichlet_data_simply(Cx z0, std::span<const Cx> colloc) {
    std::vector<double> rhs(colloc.size());
    for (std::size_t j = 0; j < colloc.size(); ++j) {
        const double d = std::abs(colloc[j] - z0);
        if (d <= Region::kBoundaryTolerance) {
            std::ostringstream msg;
            msg << "base point " << z0 << " lies on collocation point " << j + 1;
            throw GeometryError(msg.str());
        }
        rhs[j] = -std::log(d);
    }
    return rhs;
}

std::pair<ForwardMap, SolveReport> build_forward_simply(const Region& region, Cx z0,
                                                        const PointConfig& config) {
    if (region.connectivity() != 1)
        throw GeometryError("build_forward_simply needs a simply connected region");
    if (!contains(region, z0)) throw GeometryError("base point must lie inside the region");

    ArrangedSet set = arrange_component(region.outer(), config.N, config.rtilde_f, Side::exterior);
    const std::vector<double> rhs = dirichlet_data_simply(z0, set.colloc);
    auto [charges, report] = solve_dirichlet(KernelKind::dsm, set, rhs);
    ForwardMap map(region, z0, std::move(charges), {}, {std::move(set.colloc)});
    return {std::move(map), report};
}

std::pair<ForwardMap, SolveReport> build_forward_multiply(const Region& region, Cx z0,
                                                          const PointConfig& config,
                                                          SideCondition side) {
    const std::size_t n = region.connectivity();
    if (n < 2) throw GeometryError("build_forward_multiply needs a multiply connected region");
    const auto designated = region.hole_containing(z0);
    if (!designated) throw GeometryError("base point must lie inside one of the holes");
    if (side != SideCondition::amano_compatible) throw UnsupportedError("unknown side condition");

    std::vector<ArrangedSet> parts;
    parts.reserve(n);
    for (std::size_t c = 0; c < n; ++c)
        parts.push_back(arrange_component(region.component(c), config.N, config.rtilde_f,
                                          c == 0 ? Side::exterior : Side::interior));
    // Singular points of one component must not fall inside another hole.
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t k = 0; k < parts[c].singular.size(); ++k) {
            const Cx s = parts[c].singular[k];
            const auto hole = region.hole_containing(s);
            if ((c == 0 && hole) || (c > 0 && hole != c)) {
                std::ostringstream msg;
                msg << "singular point " << k + 1 << " of component " << c
                    << " falls in the wrong complement component";
                throw ArrangementError(msg.str());
            }
        }
    }

    const ArrangedSet all = merge(parts);
    const auto N = static_cast<Eigen::Index>(config.N);
    const Eigen::Index nq = static_cast<Eigen::Index>(all.singular.size());
    const Eigen::Index holes = static_cast<Eigen::Index>(n - 1);
    const Eigen::Index dim = nq + holes;

    RealMatrix a = RealMatrix::Zero(dim, dim);
    RealVector b = RealVector::Zero(dim);
    a.topLeftCorner(nq, nq) = assemble(KernelKind::dsm, all.colloc, all.singular, all.moments);
    const std::vector<double> rhs = dirichlet_data_simply(z0, all.colloc);
    for (Eigen::Index j = 0; j < nq; ++j) b(j) = rhs[static_cast<std::size_t>(j)];
    for (Eigen::Index mu = 0; mu < holes; ++mu) {
        const Eigen::Index rows = (mu + 1) * N;
        a.block(rows, nq + mu, N, 1).setConstant(-1.0);
        a.block(nq + mu, rows, 1, N).setOnes();
    }

    const auto sol = solve_dense<double>(a, b);

    ChargeSystem charges;
    charges.kernel = KernelKind::dsm;
    charges.singular = all.singular;
    charges.moments = all.moments;
    charges.coeffs.assign(sol.x.data(), sol.x.data() + nq);
    for (const auto& p : parts) charges.groups.push_back(p.singular.size());

    std::vector<double> moduli(static_cast<std::size_t>(holes));
    for (Eigen::Index mu = 0; mu < holes; ++mu) moduli[mu] = std::exp(sol.x(nq + mu));
    const double inner = moduli[*designated - 1];
    for (std::size_t mu = 0; mu < moduli.size(); ++mu) {
        const bool ok = moduli[mu] > 0.0 && moduli[mu] < 1.0 &&
                        (mu + 1 == *designated || moduli[mu] > inner);
        if (!ok) {
            std::ostringstream msg;
            msg << "computed modulus R_" << mu + 1 << " = " << moduli[mu]
                << " violates 0 < R_inner < R < 1";
            throw SolverError(msg.str());
        }
    }

    SolveReport report;
    report.cond_estimate = sol.cond_estimate;
    report.least_squares = sol.least_squares;
    for (std::size_t j = 0; j < all.colloc.size(); ++j) {
        const std::size_t comp = j / static_cast<std::size_t>(config.N);
        const double lambda = comp == 0 ? 0.0 : std::log(moduli[comp - 1]);
        report.residual_inf = std::max(
            report.residual_inf, std::abs(eval_potential(charges, all.colloc[j]) - lambda - rhs[j]));
    }
    for (std::size_t mu = 1; mu < n; ++mu)
        report.residual_inf = std::max(report.residual_inf, std::abs(charges.group_sum(mu)));

    std::vector<std::vector<Cx>> colloc;
    for (auto& p : parts) colloc.push_back(std::move(p.colloc));
    ForwardMap map(region, z0, std::move(charges), std::move(moduli), std::move(colloc));
    return {std::move(map), report};
}

std::pair<ForwardMap, SolveReport> build_forward(const Region& region, Cx z0,
                                                 const PointConfig& config) {
    return region.connectivity() == 1 ? build_forward_simply(region, z0, config)
                                      : build_forward_multiply(region, z0, config);
}

BoundaryCorrespondence boundary_correspondence(const ForwardMap& map) {
    BoundaryCorrespondence corr;
    for (const auto& comp : map.collocation()) {
        std::vector<Cx> w(comp.size());
        for (std::size_t j = 0; j < comp.size(); ++j) w[j] = map.eval(comp[j]);
        corr.z.push_back(comp);
        corr.w.push_back(std::move(w));
    }
    return corr;
}

}  // namespace confmap
