#include "confmap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/FFT>

#include "confmap/backward_map.hpp"
#include "confmap/error.hpp"

namespace confmap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double weight(long n, double s) {
    return std::pow(std::max(kTwoPi * std::abs(static_cast<double>(n)), 1.0), 2.0 * s);
}

std::vector<double> sample_trace(const std::function<double(Cx)>& fn, const BoundaryCurve& curve,
                                 std::size_t M) {
    std::vector<double> out(M);
    for (std::size_t j = 0; j < M; ++j) out[j] = fn(curve.param(static_cast<double>(j) / M));
    return out;
}

std::vector<double> difference(std::span<const double> a, std::span<const double> b) {
    std::vector<double> d(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) d[j] = a[j] - b[j];
    return d;
}

}  // namespace

double sup_error_on_boundary(const ComplexFn& approx, const ComplexFn& exact,
                             const BoundaryCurve& curve, std::size_t M) {
    if (M < 256) throw Error("sup_error_on_boundary needs at least 256 samples");
    double err = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
        const Cx z = curve.param((static_cast<double>(j) + 0.5) / M);
        const double e = std::abs(approx(z) - exact(z));
        if (!std::isfinite(e)) {
            std::ostringstream msg;
            msg << "sup_error_on_boundary: non-finite error at " << z;
            throw Error(msg.str());
        }
        err = std::max(err, e);
    }
    return err;
}

std::vector<Cx> hilbert_transform(std::span<const Cx> coeffs) {
    if (coeffs.size() % 2 == 0) throw Error("hilbert_transform expects an odd window n = -M..M");
    const long M = static_cast<long>(coeffs.size() / 2);
    std::vector<Cx> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const long n = static_cast<long>(i) - M;
        const double sgn = n > 0 ? 1.0 : (n < 0 ? -1.0 : 0.0);
        out[i] = Cx(0.0, -sgn) * coeffs[i];
    }
    return out;
}

std::vector<Cx> fourier_coefficients(std::span<const double> samples) {
    const std::size_t M = samples.size();
    if (M < 2 || M % 2 != 0) throw Error("fourier_coefficients needs an even sample count");
    Eigen::FFT<double> fft;
    std::vector<double> in(samples.begin(), samples.end());
    std::vector<Cx> spec;
    fft.fwd(spec, in);
    std::vector<Cx> out(M);
    const long half = static_cast<long>(M / 2);
    for (long n = -half + 1; n <= half; ++n) {
        const std::size_t k = static_cast<std::size_t>((n + static_cast<long>(M)) % static_cast<long>(M));
        out[static_cast<std::size_t>(n + half - 1)] = spec[k] / static_cast<double>(M);
    }
    return out;
}

double discrete_hs_norm(std::span<const double> samples, double s) {
    const std::size_t M = samples.size();
    if (M < 64 || (M & (M - 1)) != 0)
        throw Error("discrete_hs_norm needs a power-of-two sample count >= 64");
    const std::vector<Cx> c = fourier_coefficients(samples);
    const long half = static_cast<long>(M / 2);
    double total = 0.0;
    for (long n = -half + 1; n <= half; ++n)
        total += std::norm(c[static_cast<std::size_t>(n + half - 1)]) * weight(n, s);
    return std::sqrt(total);
}

HarmonicTraces exact_traces(const ComplexFn& f, Cx z0, const BoundaryCurve& curve, std::size_t M) {
    auto F = [&](Cx z) { return f(z) / (z - z0); };
    // Continue arg F from z0, where F(z0) = f'(z0) > 0, out to param(0).
    constexpr int kSteps = 512;
    const Cx start = curve.param(0.0);
    double angle = 0.0;
    Cx prev = F(z0 + (start - z0) / static_cast<double>(kSteps));
    angle = std::arg(prev);
    for (int i = 2; i <= kSteps; ++i) {
        const Cx cur = F(z0 + (start - z0) * (static_cast<double>(i) / kSteps));
        angle += std::arg(cur / prev);
        prev = cur;
    }
    HarmonicTraces t;
    t.g.resize(M);
    t.h.resize(M);
    for (std::size_t j = 0; j < M; ++j) {
        const Cx cur = F(curve.param(static_cast<double>(j) / M));
        if (j > 0) angle += std::arg(cur / prev);
        t.g[j] = std::log(std::abs(cur));
        t.h[j] = angle;
        prev = cur;
    }
    return t;
}

std::vector<ConjugateErrorSample> conjugate_error_ratio(
    const std::function<ForwardMap(int N)>& builder, const ExactMapCase& exact,
    std::span<const int> N_list, double s) {
    if (exact.region.connectivity() != 1)
        throw UnsupportedError("conjugate_error_ratio is defined for simply connected cases");
    constexpr std::size_t M = 1024;
    const BoundaryCurve& curve = exact.region.outer();
    const HarmonicTraces ref = exact_traces(exact.forward, exact.z0, curve, M);

    std::vector<ConjugateErrorSample> out;
    for (int N : N_list) {
        const ForwardMap map = builder(N);
        const auto g = sample_trace([&](Cx z) { return map.g(z); }, curve, M);
        const auto h = sample_trace([&](Cx z) { return map.h(z); }, curve, M);
        ConjugateErrorSample sample;
        sample.N = N;
        sample.g_error = discrete_hs_norm(difference(ref.g, g), s);
        sample.h_error = discrete_hs_norm(difference(ref.h, h), s);
        if (sample.g_error <= 1e-13) continue;
        sample.ratio = sample.h_error / sample.g_error;
        out.push_back(sample);
    }
    return out;
}

double harmonic_part_error(KernelKind kernel, const ExactMapCase& exact, int N, double rtilde,
                           std::size_t M_factor) {
    if (exact.region.connectivity() != 1)
        throw UnsupportedError("harmonic_part_error is defined for simply connected cases");
    const BoundaryCurve& curve = exact.region.outer();
    const ArrangedSet set = arrange_component(curve, N, rtilde, Side::exterior);
    const auto rhs = dirichlet_data_simply(exact.z0, set.colloc);
    const auto [sys, report] = solve_dirichlet(kernel, set, rhs);
    const std::size_t M = std::max<std::size_t>(256, M_factor * static_cast<std::size_t>(N));
    double err = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
        const Cx z = curve.param((static_cast<double>(j) + 0.5) / M);
        const double g_exact = std::log(std::abs(exact.forward(z) / (z - exact.z0)));
        err = std::max(err, std::abs(eval_potential(sys, z) - g_exact));
    }
    return err;
}

namespace {

ConvergenceRecord sweep_one(const SweepProblem& p, int N) {
    ConvergenceRecord rec;
    rec.N = N;
    try {
        const PointConfig cfg{N, p.rtilde_f, p.rtilde_b};
        const auto [fmap, frep] = build_forward(p.region, p.z0, cfg);
        rec.residual_f = frep.residual_inf;
        rec.cond_f = frep.cond_estimate;

        const Canonical canonical = canonical_of(fmap);
        const auto [bmap, brep] = build_backward(boundary_correspondence(fmap), cfg, canonical);
        rec.residual_b = brep.residual_inf;
        rec.cond_b = brep.cond_estimate;

        if (p.exact) {
            const std::size_t M = std::max<std::size_t>(256, p.M_factor * static_cast<std::size_t>(N));
            const ExactMapCase& ex = *p.exact;
            double ef = 0.0;
            for (const auto& c : p.region.components())
                ef = std::max(ef, sup_error_on_boundary([&](Cx z) { return fmap.eval(z); },
                                                        ex.forward, c, M));
            rec.err_forward = ef;

            auto fb = [&](Cx w) { return bmap.eval(w); };
            double eb = sup_error_on_boundary(fb, ex.backward, circle(0.0, 1.0), M);
            if (ex.modulus) {
                eb = std::max(eb, sup_error_on_boundary(fb, ex.backward, circle(0.0, *ex.modulus), M));
                rec.err_modulus = std::abs(canonical.inner_radius - *ex.modulus);
            }
            rec.err_backward = eb;
        }
    } catch (const std::exception& e) {
        rec.failure = e.what();
    }
    return rec;
}

}  // namespace

std::vector<ConvergenceRecord> convergence_sweep(const SweepProblem& problem,
                                                 std::span<const int> N_list) {
    std::vector<std::future<ConvergenceRecord>> jobs;
    jobs.reserve(N_list.size());
    for (int N : N_list)
        jobs.push_back(std::async(std::launch::async, [&problem, N] { return sweep_one(problem, N); }));
    std::vector<ConvergenceRecord> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

std::vector<std::size_t> pre_plateau(std::span<const double> err, double plateau) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < err.size(); ++i) {
        if (i > 0 && err[i] > err[i - 1]) break;
        idx.push_back(i);
        if (err[i] < plateau) break;
    }
    return idx;
}

double fitted_slope(std::span<const int> N, std::span<const double> err,
                    std::span<const std::size_t> indices) {
    if (indices.size() < 2) return 0.0;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i : indices) {
        const double x = N[i];
        const double y = std::log10(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(indices.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double fitted_slope(std::span<const int> N, std::span<const double> err) {
    const auto idx = pre_plateau(err);
    return fitted_slope(N, err, idx);
}

}  // namespace confmap
