#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "confmap/analysis.hpp"
#include "confmap/error.hpp"

using namespace confmap;
using doctest::Approx;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> sampled(int M, double (*fn)(double)) {
    std::vector<double> v(M);
    for (int j = 0; j < M; ++j) v[j] = fn(static_cast<double>(j) / M);
    return v;
}

}  // namespace

TEST_CASE("sup error on boundary") {
    const auto id = [](Cx z) { return z; };
    const auto shifted = [](Cx z) { return z + 1e-5; };
    CHECK(sup_error_on_boundary(id, id, circle(0.0, 1.0), 256) == 0.0);
    CHECK(std::abs(sup_error_on_boundary(shifted, id, circle(0.0, 1.0), 256) - 1e-5) <= 2.3e-16);
    CHECK_THROWS_AS(sup_error_on_boundary(id, id, circle(0.0, 1.0), 128), Error);

    const ExactMapCase ex = mobius_case(0.5);
    const auto f = build_forward(ex.region, ex.z0, {32, 0.2, 0.1}).first;
    // oracle-run tolerance at N = 32 (error 2.0e-7)
    CHECK(sup_error_on_boundary([&](Cx z) { return f.eval(z); }, ex.forward, circle(0.0, 1.0), 512) <= 3e-7);
}

TEST_CASE("hilbert transform") {
    // cos -> sin
    std::vector<Cx> a(5, 0.0);
    a[1] = 0.5;
    a[3] = 0.5;
    const auto b = hilbert_transform(a);
    CHECK(std::abs(b[1] - Cx(0, 0.5)) < 1e-16);
    CHECK(std::abs(b[3] - Cx(0, -0.5)) < 1e-16);
    CHECK(std::abs(b[2]) == 0.0);

    std::vector<Cx> c(5, 0.0);
    c[2] = 3.0;
    for (const Cx& x : hilbert_transform(c)) CHECK(x == Cx(0.0));

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Cx> r(41);
    for (auto& x : r) x = Cx(u(rng), u(rng));
    const auto rr = hilbert_transform(hilbert_transform(r));
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Cx expect = i == 20 ? Cx(0.0) : -r[i];
        CHECK(std::abs(rr[i] - expect) <= 1e-15);
    }
    const std::vector<Cx> even(4, 1.0);
    CHECK_THROWS_AS(hilbert_transform(even), Error);
}

TEST_CASE("discrete sobolev norm") {
    const auto c = sampled(64, [](double t) { return std::cos(kTwoPi * t); });
    CHECK(discrete_hs_norm(c, 0.0) == Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(discrete_hs_norm(c, 1.0) == Approx(kTwoPi * std::sqrt(0.5)).epsilon(1e-12));
    const auto one = sampled(128, [](double) { return 1.0; });
    CHECK(discrete_hs_norm(one, 0.0) == Approx(1.0));
    CHECK(discrete_hs_norm(one, 2.5) == Approx(1.0));

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> r(256);
    double ms = 0.0;
    for (auto& x : r) {
        x = u(rng);
        ms += x * x;
    }
    CHECK(std::abs(discrete_hs_norm(r, 0.0) - std::sqrt(ms / 256)) <= 1e-12);
    const std::vector<double> bad(100, 0.0);
    CHECK_THROWS_AS(discrete_hs_norm(bad, 1.0), Error);
}

TEST_CASE("fourier coefficients") {
    const auto c = sampled(64, [](double t) { return std::cos(kTwoPi * 3.0 * t); });
    const auto f = fourier_coefficients(c);
    REQUIRE(f.size() == 64);
    // index i <-> n = i - 31
    CHECK(std::abs(f[34] - 0.5) < 1e-15);
    CHECK(std::abs(f[28] - 0.5) < 1e-15);
}

TEST_CASE("single-mode conjugate error ratio is one") {
    // the Hilbert transform of cos(2 pi n t) is sin(2 pi n t); equal H^s norms
    for (int n : {1, 3, 7}) {
        std::vector<double> g(256), h(256);
        for (int j = 0; j < 256; ++j) {
            g[j] = std::cos(kTwoPi * n * j / 256.0);
            h[j] = std::sin(kTwoPi * n * j / 256.0);
        }
        CHECK(discrete_hs_norm(h, 1.0) / discrete_hs_norm(g, 1.0) == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("exact traces of the identity") {
    const auto t = exact_traces([](Cx z) { return z; }, 0.0, circle(0.0, 1.0), 64);
    for (double x : t.g) CHECK(std::abs(x) < 1e-14);
    for (double x : t.h) CHECK(std::abs(x) < 1e-14);
}

TEST_CASE("conjugate error ratio on the disk") {
    const ExactMapCase ex = mobius_case(0.5);
    const std::vector<int> Ns{8, 16, 24, 32};
    const auto r = conjugate_error_ratio([&](int N) { return build_forward(ex.region, ex.z0, {N, 0.2, 0.1}).first; },
                                         ex, Ns);
    CHECK(r.size() == 4);
    for (const auto& s : r) CHECK(s.ratio <= 10.0);

    // exact reproduction: z0 = 0 gives g = 0 identically, all entries filtered
    const ExactMapCase id = mobius_case(0.0);
    const auto r0 = conjugate_error_ratio([&](int N) { return build_forward(id.region, id.z0, {N, 0.2, 0.1}).first; },
                                          id, Ns);
    CHECK(r0.empty());
}

TEST_CASE("plateau and slope") {
    const std::vector<double> e{1e-2, 1e-4, 1e-6, 1e-12, 1e-13, 1e-12};
    const auto idx = pre_plateau(e);
    CHECK(idx.size() == 4);
    const std::vector<int> N{8, 16, 24, 32, 40, 48};
    CHECK(fitted_slope(std::span<const int>(N.data(), 3), std::span<const double>(e.data(), 3)) ==
          Approx(-0.25));
    const std::vector<double> up{1e-3, 1e-5, 1e-4};
    CHECK(pre_plateau(up).size() == 2);
}

TEST_CASE("convergence sweep") {
    const ExactMapCase ex = mobius_case(0.5);
    const std::vector<int> Ns{8, 16, 24, 32};
    const auto recs = convergence_sweep({ex.region, ex.z0, 0.2, 0.1, ex, 16}, Ns);
    REQUIRE(recs.size() == 4);
    std::vector<double> ef;
    for (const auto& r : recs) {
        CHECK_FALSE(r.failure.has_value());
        CHECK(*r.residual_f <= 1e-9);
        ef.push_back(*r.err_forward);
    }
    CHECK(fitted_slope(Ns, ef) <= -0.05);

    const ExactMapCase id = mobius_case(0.0);
    for (const auto& r : convergence_sweep({id.region, id.z0, 0.2, 0.1, id, 16}, Ns)) CHECK(*r.err_forward <= 1e-12);

    // no oracle: only residuals
    const auto plain = convergence_sweep({cassini_oval_region(1.3), Cx(0.2, 0.1), 0.06, 0.04, std::nullopt, 16}, Ns);
    for (const auto& r : plain) {
        CHECK_FALSE(r.err_forward.has_value());
        CHECK(r.residual_f.has_value());
    }

    // a failing N is recorded, the sweep continues
    const std::vector<int> bad{2, 16};
    const auto mixed = convergence_sweep({ex.region, ex.z0, 0.2, 0.1, ex, 16}, bad);
    CHECK(mixed[0].failure.has_value());
    CHECK_FALSE(mixed[1].failure.has_value());

    const ExactMapCase frame = frame_case(2.0 * std::sqrt(14.0), 7.0, 2.0, 1.0);
    const std::vector<int> fN{16, 32, 48};
    const auto fr = convergence_sweep({frame.region, 0.0, 0.06, 0.03, frame, 16}, fN);
    CHECK(*fr[1].err_modulus < *fr[0].err_modulus);
    CHECK(*fr[2].err_modulus < *fr[1].err_modulus);
}
