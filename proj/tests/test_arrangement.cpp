#include <doctest.h>

#include <cmath>
#include <numbers>

#include "confmap/arrangement.hpp"
#include "confmap/error.hpp"

using namespace confmap;
using doctest::Approx;

TEST_CASE("collocation points") {
    const auto q = collocation_points(circle(0.0, 1.0), 4);
    REQUIRE(q.size() == 4);
    CHECK(std::abs(q[0] - Cx(0, 1)) < 1e-15);
    CHECK(std::abs(q[1] - Cx(-1, 0)) < 1e-15);
    CHECK(std::abs(q[2] - Cx(0, -1)) < 1e-15);
    CHECK(std::abs(q[3] - Cx(1, 0)) < 1e-15);
    const auto e = collocation_points(circle(0.0, 1.0), 8);
    CHECK(std::abs(e[0] - std::polar(1.0, std::numbers::pi / 4)) < 1e-15);
    CHECK(collocation_points(cassini_oval(1.1), 4)[3].real() == Approx(1.486607).epsilon(1e-6));
    CHECK_THROWS_AS(collocation_points(circle(0.0, 1.0), 3), ArrangementError);
}

TEST_CASE("amano singular points") {
    const auto q = collocation_points(circle(0.0, 1.0), 4);
    const auto z = amano_singular(q, 1.0);
    CHECK(std::abs(z[0] - Cx(0, 2)) < 1e-15);
    const auto same = amano_singular(q, 0.0);
    for (int k = 0; k < 4; ++k) CHECK(same[k] == q[k]);

    for (int N : {5, 12, 33}) {
        const auto pts = collocation_points(circle(0.0, 1.0), N);
        const double r = 0.7;
        const auto s = amano_singular(pts, r);
        for (int k = 0; k < N; ++k)
            CHECK(std::abs(s[k] - pts[k] * (1.0 + r * std::sin(2.0 * std::numbers::pi / N))) < 1e-14);
    }
}

TEST_CASE("dipole moments") {
    const auto q = collocation_points(circle(0.0, 1.0), 4);
    const auto s = amano_singular(q, 1.0);
    const auto n = amano_moments(s);
    CHECK(std::abs(n[0] - Cx(0, 1)) < 1e-15);
    CHECK(std::abs(amano_moments(q)[0] - Cx(0, 1)) < 1e-15);

    const auto pts = collocation_points(circle(0.0, 1.0), 17);
    const auto sing = amano_singular(pts, 2.0);
    const auto mom = amano_moments(sing);
    for (std::size_t k = 0; k < sing.size(); ++k) CHECK(std::abs(mom[k] - sing[k] / std::abs(sing[k])) < 1e-14);

    const std::vector<Cx> degenerate{1.0, 2.0, 1.0, 2.0};
    CHECK_THROWS_AS(amano_moments(degenerate), ArrangementError);
}

TEST_CASE("arrange_component radii and sides") {
    const auto ext = arrange_component(circle(0.0, 1.0), 30, 0.2, Side::exterior);
    for (const Cx& z : ext.singular) CHECK(std::abs(z) == Approx(2.247469).epsilon(1e-6));
    for (const Cx& n : ext.moments) CHECK(std::abs(n) == Approx(1.0).epsilon(1e-15));

    const auto in = arrange_component(circle(0.0, 1.0), 8, 0.1, Side::interior);
    for (const Cx& z : in.singular) CHECK(std::abs(z) == Approx(0.434315).epsilon(1e-6));

    const auto oval = arrange_component(cassini_oval(1.1), 64, 0.06, Side::exterior);
    for (const Cx& n : oval.moments) CHECK(std::abs(n) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("arrange_component rejects offsets that cross the curve") {
    // interior offset larger than the radius pushes points through the centre
    CHECK_THROWS_AS(arrange_component(circle(0.0, 1.0), 8, 0.5, Side::interior), ArrangementError);
}

TEST_CASE("conformal arrangement") {
    const auto id = [](Cx z) { return z; };
    CHECK(std::abs(conformal_singular(id, 1.5, 4)[0] - Cx(0, 1.5)) < 1e-15);
    for (int N : {8, 16, 32}) {
        const auto q = collocation_points(circle(0.0, 1.0), N);
        for (double R : {1.05, 1.1, 1.2}) {
            const auto a = amano_singular(q, (R - 1.0) / std::sin(2.0 * std::numbers::pi / N));
            const auto c = conformal_singular(id, R, N);
            for (int k = 0; k < N; ++k) CHECK(std::abs(a[k] - c[k]) < 1e-13);
        }
    }
    const auto psi = [](Cx z) { return z + 0.1 * z * z; };
    const int N = 64;
    const double R = 1.1;
    const auto base = conformal_singular(psi, 1.0, N);
    const auto a = amano_singular(base, (R - 1.0) / std::sin(2.0 * std::numbers::pi / N));
    const auto c = conformal_singular(psi, R, N);
    double dev = 0.0;
    for (int k = 0; k < N; ++k) dev = std::max(dev, std::abs(a[k] - c[k]));
    CHECK(dev <= 10.0 * ((R - 1.0) * (R - 1.0) + (R - 1.0) / N));
}
