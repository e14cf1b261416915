#include "confmap/potential.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "confmap/error.hpp"

namespace confmap {

namespace {

void check_distinct(Cx z, Cx zeta) {
    if (z == zeta) {
        std::ostringstream msg;
        msg << "evaluation point " << z << " coincides with singular point " << zeta;
        throw SingularKernelError(msg.str());
    }
}

void check_shape(const ChargeSystem& sys) {
    if (sys.coeffs.size() != sys.singular.size() ||
        (sys.kernel == KernelKind::dsm && sys.moments.size() != sys.singular.size()))
        throw Error("charge system has mismatched singular/moment/coefficient lengths");
}

}  // namespace

double ChargeSystem::group_sum(std::size_t g) const {
    const std::size_t begin =
        std::accumulate(groups.begin(), groups.begin() + static_cast<std::ptrdiff_t>(g), std::size_t{0});
    const std::size_t end = begin + groups.at(g);
    double s = 0.0;
    for (std::size_t k = begin; k < end; ++k) s += coeffs[k];
    return s;
}

double dsm_entry(Cx z, Cx zeta, Cx n) {
    check_distinct(z, zeta);
    return (n / (z - zeta)).real();
}

double mfs_entry(Cx z, Cx zeta) {
    check_distinct(z, zeta);
    return std::log(std::abs(z - zeta));
}

RealMatrix assemble(KernelKind kernel, std::span<const Cx> colloc, std::span<const Cx> singular,
                    std::span<const Cx> moments) {
    if (kernel == KernelKind::dsm && moments.size() != singular.size())
        throw Error("assemble: DSM needs one moment per singular point");
    RealMatrix g(static_cast<Eigen::Index>(colloc.size()), static_cast<Eigen::Index>(singular.size()));
    for (std::size_t j = 0; j < colloc.size(); ++j) {
        for (std::size_t k = 0; k < singular.size(); ++k) {
            if (colloc[j] == singular[k]) {
                std::ostringstream msg;
                msg << "assemble: collocation point " << j + 1 << " coincides with singular point "
                    << k + 1;
                throw SingularKernelError(msg.str());
            }
            g(j, k) = kernel == KernelKind::dsm ? dsm_entry(colloc[j], singular[k], moments[k])
                                                : mfs_entry(colloc[j], singular[k]);
        }
    }
    return g;
}

ArrangedSet merge(std::span<const ArrangedSet> parts) {
    ArrangedSet out;
    for (const auto& p : parts) {
        out.colloc.insert(out.colloc.end(), p.colloc.begin(), p.colloc.end());
        out.singular.insert(out.singular.end(), p.singular.begin(), p.singular.end());
        out.moments.insert(out.moments.end(), p.moments.begin(), p.moments.end());
    }
    return out;
}

std::pair<ChargeSystem, SolveReport> solve_dirichlet(KernelKind kernel, const ArrangedSet& arranged,
                                                     std::span<const double> rhs) {
    return solve_dirichlet(kernel, std::span<const ArrangedSet>(&arranged, 1), rhs);
}

std::pair<ChargeSystem, SolveReport> solve_dirichlet(KernelKind kernel,
                                                     std::span<const ArrangedSet> components,
                                                     std::span<const double> rhs) {
    const ArrangedSet all = merge(components);
    if (all.colloc.size() != all.singular.size())
        throw SolverError("solve_dirichlet: system is not square");
    if (rhs.size() != all.colloc.size())
        throw SolverError("solve_dirichlet: rhs length does not match the collocation count");

    const RealMatrix g = assemble(kernel, all.colloc, all.singular, all.moments);
    const RealVector b = Eigen::Map<const RealVector>(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
    const auto sol = solve_dense<double>(g, b);

    ChargeSystem sys;
    sys.kernel = kernel;
    sys.singular = all.singular;
    sys.moments = all.moments;
    sys.coeffs.assign(sol.x.data(), sol.x.data() + sol.x.size());
    for (const auto& c : components) sys.groups.push_back(c.singular.size());

    SolveReport report;
    report.cond_estimate = sol.cond_estimate;
    report.least_squares = sol.least_squares;
    for (std::size_t j = 0; j < all.colloc.size(); ++j)
        report.residual_inf =
            std::max(report.residual_inf, std::abs(eval_potential(sys, all.colloc[j]) - rhs[j]));
    return {std::move(sys), report};
}

double eval_potential(const ChargeSystem& sys, Cx z) {
    check_shape(sys);
    double u = 0.0;
    for (std::size_t k = 0; k < sys.size(); ++k) {
        u += sys.coeffs[k] * (sys.kernel == KernelKind::dsm
                                  ? dsm_entry(z, sys.singular[k], sys.moments[k])
                                  : mfs_entry(z, sys.singular[k]));
    }
    return u;
}

Cx eval_complex(const ChargeSystem& sys, Cx z) {
    if (sys.kernel != KernelKind::dsm)
        throw UnsupportedError("complex potential requires the DSM kernel");
    check_shape(sys);
    Cx acc = 0.0;
    for (std::size_t k = 0; k < sys.size(); ++k) {
        check_distinct(z, sys.singular[k]);
        acc += sys.coeffs[k] * sys.moments[k] / (z - sys.singular[k]);
    }
    return acc;
}

double eval_conjugate(const ChargeSystem& sys, Cx z) {
    if (sys.kernel != KernelKind::dsm)
        throw UnsupportedError("conjugate of an MFS potential needs argument branch tracking");
    return eval_complex(sys, z).imag();
}

Cx eval_gradient(const ChargeSystem& sys, Cx z) {
    check_shape(sys);
    Cx acc = 0.0;
    for (std::size_t k = 0; k < sys.size(); ++k) {
        check_distinct(z, sys.singular[k]);
        const Cx d = z - sys.singular[k];
        if (sys.kernel == KernelKind::dsm)
            acc -= sys.coeffs[k] * sys.moments[k] / (d * d);
        else
            acc += sys.coeffs[k] / d;
    }
    return acc;
}

double conjugate_period(const ChargeSystem& sys, const BoundaryCurve& loop, std::size_t samples) {
    if (samples < 3) throw Error("conjugate_period needs at least 3 loop samples");
    double total = 0.0;
    for (std::size_t j = 0; j < samples; ++j) {
        const double tau = static_cast<double>(j) / samples;
        const Cx z = loop.param(tau);
        for (const Cx& zeta : sys.singular) {
            if (std::abs(z - zeta) <= 1e-6) {
                std::ostringstream msg;
                msg << "conjugate_period: loop passes within 1e-6 of singular point " << zeta;
                throw SingularKernelError(msg.str());
            }
        }
        // -u_y dx + u_x dy = Im((u_x - i u_y) dz)
        total += (eval_gradient(sys, z) * loop.deriv(tau)).imag();
    }
    return total / static_cast<double>(samples);
}

}  // namespace confmap
