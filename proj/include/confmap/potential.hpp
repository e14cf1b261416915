#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "confmap/arrangement.hpp"
#include "confmap/geometry.hpp"
#include "confmap/linalg.hpp"

namespace confmap {

/// Dipole kernel Re(n / (z - zeta)) or logarithmic kernel log|z - zeta|.
enum class KernelKind { dsm, mfs };

/// Discrete solution of a Dirichlet problem: singular points, their moments
/// (ignored by the MFS kernel) and the real coefficients. `groups` holds the
/// number of singular points contributed by each boundary component, in order.
struct ChargeSystem {
    KernelKind kernel = KernelKind::dsm;
    std::vector<Cx> singular;
    std::vector<Cx> moments;
    std::vector<double> coeffs;
    std::vector<std::size_t> groups;

    std::size_t size() const { return singular.size(); }

    /// Sum of the coefficients belonging to group `g`.
    double group_sum(std::size_t g) const;
};

struct SolveReport {
    double residual_inf = 0.0;
    std::optional<double> cond_estimate;
    bool least_squares = false;
};

/// Re(n / (z - zeta)). Throws SingularKernelError when z coincides with zeta.
double dsm_entry(Cx z, Cx zeta, Cx n);

/// log|z - zeta|. Throws SingularKernelError when z coincides with zeta.
double mfs_entry(Cx z, Cx zeta);

/// G[j][k] = kernel(z_j, zeta_k, n_k).
RealMatrix assemble(KernelKind kernel, std::span<const Cx> colloc, std::span<const Cx> singular,
                    std::span<const Cx> moments);

/// Concatenates several per-component arrangements into one.
ArrangedSet merge(std::span<const ArrangedSet> parts);

/// Solves G Q = rhs on the arranged points. The report's residual is
/// max_j |eval_potential(z_j) - rhs_j|.
std::pair<ChargeSystem, SolveReport> solve_dirichlet(KernelKind kernel, const ArrangedSet& arranged,
                                                     std::span<const double> rhs);

/// Multi-component variant; records the group sizes on the returned system.
std::pair<ChargeSystem, SolveReport> solve_dirichlet(KernelKind kernel,
                                                     std::span<const ArrangedSet> components,
                                                     std::span<const double> rhs);

double eval_potential(const ChargeSystem& sys, Cx z);

/// Sum_k Q_k n_k / (z - zeta_k); its real part is the DSM potential. DSM only.
Cx eval_complex(const ChargeSystem& sys, Cx z);

/// Sum_k Q_k Im(n_k / (z - zeta_k)). Throws UnsupportedError for MFS systems,
/// whose conjugate is multivalued.
double eval_conjugate(const ChargeSystem& sys, Cx z);

/// u_x - i u_y of the potential at z.
Cx eval_gradient(const ChargeSystem& sys, Cx z);

/// Trapezoid approximation of the loop integral of (-u_y dx + u_x dy) over
/// `samples` points of `loop`. Throws SingularKernelError when the loop passes
/// within 1e-6 of a singular point.
double conjugate_period(const ChargeSystem& sys, const BoundaryCurve& loop,
                        std::size_t samples = 1024);

}  // namespace confmap
