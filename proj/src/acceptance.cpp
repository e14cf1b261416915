#include "confmap/acceptance.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "confmap/analysis.hpp"
#include "confmap/backward_map.hpp"
#include "confmap/forward_map.hpp"
#include "confmap/reference.hpp"

namespace confmap {

namespace {

constexpr double kPlateau = 1e-11;

struct Series {
    std::vector<int> N;
    std::vector<double> err;
};

Series series(const std::vector<ConvergenceRecord>& recs, std::optional<double> ConvergenceRecord::*field) {
    Series s;
    for (const auto& r : recs) {
        if (r.failure || !(r.*field)) continue;
        s.N.push_back(r.N);
        s.err.push_back(*(r.*field));
    }
    return s;
}

// Strictly decreasing until the error first drops below the plateau level.
bool monotone_pre_plateau(const std::vector<double>& err) {
    for (std::size_t i = 1; i < err.size(); ++i) {
        if (err[i - 1] < kPlateau) break;
        if (!(err[i] < err[i - 1])) return false;
    }
    return true;
}

std::string fmt(double x) {
    std::ostringstream o;
    o << std::scientific << std::setprecision(3) << x;
    return o.str();
}

std::string list(const Series& s) {
    std::ostringstream o;
    for (std::size_t i = 0; i < s.N.size(); ++i) o << (i ? " " : "") << s.N[i] << ":" << fmt(s.err[i]);
    return o.str();
}

bool all_built(const std::vector<ConvergenceRecord>& recs, std::string& why) {
    for (const auto& r : recs) {
        if (r.failure) {
            why = "N=" + std::to_string(r.N) + " failed: " + *r.failure;
            return false;
        }
    }
    return true;
}

double max_residual(const std::vector<ConvergenceRecord>& recs) {
    double m = 0.0;
    for (const auto& r : recs) m = std::max({m, r.residual_f.value_or(0.0), r.residual_b.value_or(0.0)});
    return m;
}

std::vector<ConvergenceRecord> sweep_case(const ExactMapCase& ex, double rf, double rb,
                                          const std::vector<int>& Ns) {
    SweepProblem p{ex.region, ex.z0, rf, rb, ex, 16};
    return convergence_sweep(p, Ns);
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;

    const std::vector<int> disk_Ns{8, 16, 24, 32, 40, 48};
    const ExactMapCase disk = mobius_case(0.5);
    const auto disk_recs = sweep_case(disk, 0.2, 0.1, disk_Ns);

    const std::vector<int> long_Ns{8, 16, 24, 32, 40, 48, 56, 64};
    const ExactMapCase oval = cassini_case(1.1);
    const auto oval_recs = sweep_case(oval, 0.06, 0.04, long_Ns);

    const ExactMapCase frame = frame_case(2.0 * std::sqrt(14.0), 7.0, 2.0, 1.0);
    const auto frame_recs = sweep_case(frame, 0.06, 0.03, long_Ns);

    // 1. Forward disk convergence.
    {
        CriterionResult c{1, "exponential convergence of the forward map, disk z0=0.5", false, {}};
        std::string why;
        if (all_built(disk_recs, why)) {
            const Series s = series(disk_recs, &ConvergenceRecord::err_forward);
            const double slope = fitted_slope(s.N, s.err);
            c.pass = monotone_pre_plateau(s.err) && slope <= -0.05 && s.err.back() <= 1e-8;
            c.detail = "slope=" + fmt(slope) + " err[N]: " + list(s);
        } else {
            c.detail = why;
        }
        out.push_back(c);
    }

    // 2. Backward disk convergence and round trip.
    {
        CriterionResult c{2, "backward map convergence and round trip, disk", false, {}};
        std::string why;
        if (all_built(disk_recs, why)) {
            const Series s = series(disk_recs, &ConvergenceRecord::err_backward);
            const double slope = fitted_slope(s.N, s.err);
            const PointConfig cfg{32, 0.2, 0.1};
            const auto [fmap, frep] = build_forward(disk.region, disk.z0, cfg);
            const auto [bmap, brep] = build_backward(boundary_correspondence(fmap), cfg, canonical_of(fmap));
            std::mt19937_64 rng(20190301);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            double worst = 0.0;
            for (int i = 0; i < 200; ++i) {
                const Cx z = std::sqrt(u(rng)) * std::polar(1.0, 2.0 * std::numbers::pi * u(rng));
                worst = std::max(worst, std::abs(bmap.eval(fmap.eval(z)) - z));
            }
            c.pass = monotone_pre_plateau(s.err) && slope < 0.0 && worst <= 1e-6;
            c.detail = "round_trip=" + fmt(worst) + " slope=" + fmt(slope) + " err_b[N]: " + list(s);
        } else {
            c.detail = why;
        }
        out.push_back(c);
    }

    // 3. Cassini oval.
    {
        CriterionResult c{3, "Cassini oval a=1.1 forward and backward convergence", false, {}};
        std::string why;
        if (all_built(oval_recs, why)) {
            const Series f = series(oval_recs, &ConvergenceRecord::err_forward);
            const Series b = series(oval_recs, &ConvergenceRecord::err_backward);
            const bool mono = monotone_pre_plateau(f.err) && monotone_pre_plateau(b.err);
            c.pass = mono && f.err.back() <= 1e-6 && b.err.back() <= 1e-6;
            c.detail = std::string("monotone=") + (mono ? "yes" : "no") + " err_f(64)=" + fmt(f.err.back()) +
                       " err_b(64)=" + fmt(b.err.back()) + " (tol 1e-6 each)";
        } else {
            c.detail = why;
        }
        out.push_back(c);
    }

    // 4. Cassini frame modulus.
    {
        CriterionResult c{4, "Cassini frame modulus converges to sqrt(14)/7", false, {}};
        std::string why;
        if (all_built(frame_recs, why)) {
            const Series m = series(frame_recs, &ConvergenceRecord::err_modulus);
            c.pass = monotone_pre_plateau(m.err) && m.err.back() <= 1e-6;
            c.detail = "|R-rho|[N]: " + list(m);
        } else {
            c.detail = why;
        }
        out.push_back(c);
    }

    // 5. Conjugate periods.
    {
        CriterionResult c{5, "DSM conjugate periods vanish; MFS period equals 2*pi*sum(Q)", false, {}};
        double worst_dsm = 0.0;
        bool ok = true;
        std::string why;
        const std::vector<ExactMapCase> cases{frame, annulus_case(0.5)};
        for (const auto& ex : cases) {
            for (int N : long_Ns) {
                try {
                    const auto [fmap, rep] = build_forward(ex.region, ex.z0, {N, 0.06, 0.03});
                    for (std::size_t h = 1; h < ex.region.connectivity(); ++h)
                        worst_dsm = std::max(worst_dsm,
                                             std::abs(conjugate_period(fmap.charges(), ex.region.component(h))));
                } catch (const std::exception& e) {
                    ok = false;
                    why = ex.name + " N=" + std::to_string(N) + ": " + e.what();
                }
            }
        }
        // MFS baseline on the frame with the exact modulus in the data.
        double worst_mfs = 0.0;
        for (int N : {16, 32, 48}) {
            std::vector<ArrangedSet> parts{
                arrange_component(frame.region.component(0), N, 0.06, Side::exterior),
                arrange_component(frame.region.component(1), N, 0.06, Side::interior)};
            std::vector<double> rhs;
            for (std::size_t p = 0; p < parts.size(); ++p)
                for (const Cx& z : parts[p].colloc)
                    rhs.push_back((p == 0 ? 0.0 : std::log(*frame.modulus)) - std::log(std::abs(z)));
            const auto [sys, rep] = solve_dirichlet(KernelKind::mfs, parts, rhs);
            const double period = conjugate_period(sys, frame.region.component(1));
            worst_mfs = std::max(worst_mfs, std::abs(period - 2.0 * std::numbers::pi * sys.group_sum(1)));
        }
        c.pass = ok && worst_dsm <= 1e-8 && worst_mfs <= 1e-8;
        c.detail = ok ? "max|DSM period|=" + fmt(worst_dsm) + " max|MFS period - 2pi sumQ|=" + fmt(worst_mfs) : why;
        out.push_back(c);
    }

    // 6. Conjugate error ratio.
    {
        CriterionResult c{6, "discrete H^1 ratio ||h-h^N|| / ||g-g^N|| bounded by 10, disk", false, {}};
        const auto samples = conjugate_error_ratio(
            [&](int N) { return build_forward(disk.region, disk.z0, {N, 0.2, 0.1}).first; }, disk, disk_Ns, 1.0);
        double worst = 0.0;
        std::ostringstream o;
        for (const auto& s : samples) {
            worst = std::max(worst, s.ratio);
            o << " " << s.N << ":" << fmt(s.ratio);
        }
        c.pass = !samples.empty() && worst <= 10.0;
        c.detail = "max ratio=" + fmt(worst) + " ratios:" + o.str();
        out.push_back(c);
    }

    // 7. Arrangement theorem.
    {
        CriterionResult c{7, "Amano arrangement linearizes the conformal arrangement", false, {}};
        double circle_dev = 0.0;
        for (int N : {8, 16, 32}) {
            const auto colloc = collocation_points(circle(0.0, 1.0), N);
            for (double R : {1.05, 1.1, 1.2}) {
                const auto a = amano_singular(colloc, (R - 1.0) / std::sin(2.0 * std::numbers::pi / N));
                const auto cf = conformal_singular([](Cx z) { return z; }, R, N);
                for (int k = 0; k < N; ++k) circle_dev = std::max(circle_dev, std::abs(a[k] - cf[k]));
            }
        }
        const auto psi = [](Cx z) { return z + 0.1 * z * z; };
        auto E = [&](double delta, int N) {
            const auto colloc = conformal_singular(psi, 1.0, N);
            const auto a = amano_singular(colloc, delta / std::sin(2.0 * std::numbers::pi / N));
            const auto cf = conformal_singular(psi, 1.0 + delta, N);
            double e = 0.0;
            for (int k = 0; k < N; ++k) e = std::max(e, std::abs(a[k] - cf[k]));
            return e;
        };
        const double half_ratio = E(0.05, 256) / E(0.1, 256);
        const double n_ratio = E(0.1, 512) / E(0.1, 256);
        c.pass = circle_dev <= 1e-13 && half_ratio <= 0.6 && n_ratio <= 1.05;
        c.detail = "circle deviation=" + fmt(circle_dev) + " E(d/2)/E(d)=" + fmt(half_ratio) +
                   " E(2N)/E(N)=" + fmt(n_ratio);
        out.push_back(c);
    }

    // 8. Solver contracts.
    {
        CriterionResult c{8, "collocation residuals, manufactured solution, Hilbert/Parseval identities", false, {}};
        const double res = std::max({max_residual(disk_recs), max_residual(oval_recs), max_residual(frame_recs)});

        const ArrangedSet set = arrange_component(circle(0.0, 1.0), 16, 0.2, Side::exterior);
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> q(16);
        for (auto& x : q) x = u(rng);
        const RealMatrix g = assemble(KernelKind::dsm, set.colloc, set.singular, set.moments);
        const RealVector rhs = g * Eigen::Map<const RealVector>(q.data(), 16);
        const auto [sys, rep] = solve_dirichlet(KernelKind::dsm, set, std::span<const double>(rhs.data(), 16));
        double qerr = 0.0;
        for (int k = 0; k < 16; ++k) qerr = std::max(qerr, std::abs(sys.coeffs[k] - q[k]));
        const double qtol = std::max(1e-8, 10.0 * rep.cond_estimate.value_or(1.0) * 2.2e-16);

        std::vector<Cx> coeffs(33);
        for (auto& x : coeffs) x = Cx(u(rng), u(rng));
        const auto twice = hilbert_transform(hilbert_transform(coeffs));
        double invol = 0.0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const Cx expect = i == 16 ? Cx(0.0) : -coeffs[i];
            invol = std::max(invol, std::abs(twice[i] - expect));
        }
        std::vector<double> samples(256);
        double mean_sq = 0.0;
        for (auto& x : samples) {
            x = u(rng);
            mean_sq += x * x;
        }
        const double parseval = std::abs(discrete_hs_norm(samples, 0.0) - std::sqrt(mean_sq / 256.0));

        c.pass = res <= 1e-9 && qerr <= qtol && invol <= 1e-12 && parseval <= 1e-12;
        c.detail = "max residual=" + fmt(res) + " |Q-Q*|=" + fmt(qerr) + " (tol " + fmt(qtol) + ") involution=" +
                   fmt(invol) + " parseval=" + fmt(parseval);
        out.push_back(c);
    }

    // 9. MFS vs DSM harmonic part.
    {
        CriterionResult c{9, "MFS and DSM harmonic-part errors both decay, disk", false, {}};
        Series mfs, dsm;
        for (int N : disk_Ns) {
            mfs.N.push_back(N);
            dsm.N.push_back(N);
            mfs.err.push_back(harmonic_part_error(KernelKind::mfs, disk, N, 0.2));
            dsm.err.push_back(harmonic_part_error(KernelKind::dsm, disk, N, 0.2));
        }
        const double sm = fitted_slope(mfs.N, mfs.err);
        const double sd = fitted_slope(dsm.N, dsm.err);
        c.pass = sm < 0.0 && sd < 0.0;
        c.detail = "slope MFS=" + fmt(sm) + " DSM=" + fmt(sd) + " | MFS " + list(mfs) + " | DSM " + list(dsm);
        out.push_back(c);
    }

    return out;
}

bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& os) {
    bool all = true;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " -- " << r.detail << "\n";
        all = all && r.pass;
    }
    return all;
}

}  // namespace confmap
