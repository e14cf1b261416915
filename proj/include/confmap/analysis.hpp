#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "confmap/arrangement.hpp"
#include "confmap/forward_map.hpp"
#include "confmap/geometry.hpp"
#include "confmap/potential.hpp"
#include "confmap/reference.hpp"

namespace confmap {

using ComplexFn = std::function<Cx(Cx)>;

/// max_j |approx(z_j) - exact(z_j)| over z_j = curve.param((j + 1/2) / M).
/// Requires M >= 256.
double sup_error_on_boundary(const ComplexFn& approx, const ComplexFn& exact,
                             const BoundaryCurve& curve, std::size_t M);

/// b_n = -i sgn(n) a_n for coefficients indexed n = -M..M (index i <-> n = i - M).
std::vector<Cx> hilbert_transform(std::span<const Cx> coeffs);

/// Discrete Fourier coefficients g^(n) = (1/M) sum_j g_j exp(-2 pi i n j / M),
/// returned for n = -M/2+1 .. M/2 (index i <-> n = i - M/2 + 1).
std::vector<Cx> fourier_coefficients(std::span<const double> samples);

/// sqrt(sum_n |g^(n)|^2 max(2 pi |n|, 1)^(2 s)) over the discrete spectrum of a
/// uniform sample set. M must be a power of two >= 64.
double discrete_hs_norm(std::span<const double> samples, double s);

/// Boundary traces of g = log|f/(z - z0)| and its conjugate h = arg(f/(z - z0)),
/// h continued from h(z0) = 0 along the segment to param(0) then along the curve.
struct HarmonicTraces {
    std::vector<double> g;
    std::vector<double> h;
};
HarmonicTraces exact_traces(const ComplexFn& f, Cx z0, const BoundaryCurve& curve, std::size_t M);

struct ConjugateErrorSample {
    int N = 0;
    double g_error = 0.0;
    double h_error = 0.0;
    double ratio = 0.0;
};

/// Per N, ||h - h^(N)||_{H^s} / ||g - g^(N)||_{H^s} on M = 1024 boundary samples
/// of a simply connected case. Entries whose g-error is <= 1e-13 are dropped.
std::vector<ConjugateErrorSample> conjugate_error_ratio(
    const std::function<ForwardMap(int N)>& builder, const ExactMapCase& exact,
    std::span<const int> N_list, double s = 1.0);

/// Sup error of the harmonic part g^(N) alone on the outer boundary of a simply
/// connected case, for either kernel. Used to compare the MFS baseline with DSM.
double harmonic_part_error(KernelKind kernel, const ExactMapCase& exact, int N, double rtilde,
                           std::size_t M_factor = 16);

struct ConvergenceRecord {
    int N = 0;
    std::optional<double> err_forward;
    std::optional<double> err_backward;
    std::optional<double> err_modulus;
    std::optional<double> residual_f;
    std::optional<double> residual_b;
    std::optional<double> cond_f;
    std::optional<double> cond_b;
    std::optional<std::string> failure;
};

struct SweepProblem {
    Region region;
    Cx z0;
    double rtilde_f = 0.2;
    double rtilde_b = 0.1;
    std::optional<ExactMapCase> exact;
    std::size_t M_factor = 16;
};

/// One record per N (in input order). Builds run concurrently; a failing N is
/// recorded with its message and the sweep continues.
std::vector<ConvergenceRecord> convergence_sweep(const SweepProblem& problem,
                                                 std::span<const int> N_list);

/// Prefix of the series that ends at the first N where the error increases
/// (excluded) or drops below `plateau` (included).
std::vector<std::size_t> pre_plateau(std::span<const double> err, double plateau = 1e-11);

/// Least-squares slope of log10(err) against N over the given indices.
double fitted_slope(std::span<const int> N, std::span<const double> err,
                    std::span<const std::size_t> indices);

/// Slope over the pre-plateau range.
double fitted_slope(std::span<const int> N, std::span<const double> err);

}  // namespace confmap
