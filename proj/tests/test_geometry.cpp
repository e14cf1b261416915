#include <doctest.h>

#include <cmath>
#include <numbers>

#include "confmap/error.hpp"
#include "confmap/geometry.hpp"

using namespace confmap;
using doctest::Approx;

TEST_CASE("circle parameterization") {
    CHECK(std::abs(circle(0.0, 1.0).param(0.0) - Cx(1, 0)) < 1e-15);
    CHECK(std::abs(circle(0.0, 1.0).param(0.25) - Cx(0, 1)) < 1e-15);
    CHECK(std::abs(circle(0.5, 2.0).param(0.5) - Cx(-1.5, 0)) < 1e-15);
}

TEST_CASE("cassini oval points") {
    const auto c = cassini_oval(1.1);
    CHECK(c.param(0.0).real() == Approx(1.486607).epsilon(1e-6));
    CHECK(std::abs(c.param(0.0).imag()) < 1e-15);
    CHECK(std::abs(c.param(0.25).real()) < 1e-12);
    CHECK(c.param(0.25).imag() == Approx(0.458258).epsilon(1e-6));
    for (double a : {1.05, 1.1, 1.5, 3.0}) {
        const auto oval = cassini_oval(a);
        for (int j = 0; j < 64; ++j) {
            const Cx z = oval.param(j / 64.0);
            CHECK(std::abs(std::abs(z + 1.0) * std::abs(z - 1.0) - a * a) < 1e-12);
        }
    }
}

TEST_CASE("cassini derivative matches finite differences") {
    const auto c = cassini_oval(1.1, 2.0);
    const double h = 1e-6;
    for (int j = 0; j < 32; ++j) {
        const double t = (j + 0.3) / 32.0;
        const Cx fd = (c.param(t + h) - c.param(t - h)) / (2.0 * h);
        CHECK(std::abs(fd - c.deriv(t)) < 1e-5 * std::abs(c.deriv(t)));
    }
}

TEST_CASE("cassini oval requires a > 1") {
    CHECK_THROWS_AS(cassini_oval(1.0), GeometryError);
    CHECK_THROWS_AS(cassini_oval(0.5), GeometryError);
}

TEST_CASE("curve validation") {
    // not closed
    CHECK_THROWS_AS(BoundaryCurve([](double t) { return Cx(t, 0.0); }, [](double) { return Cx(1, 0); }),
                    GeometryError);
    // orientation mismatch
    const auto c = circle(0.0, 1.0);
    CHECK_THROWS_AS(BoundaryCurve([&](double t) { return c.param(t); }, [&](double t) { return c.deriv(t); },
                                  Orientation::negative),
                    GeometryError);
    const auto r = c.reversed();
    CHECK(r.orientation() == Orientation::negative);
    CHECK(std::abs(r.param(0.25) - Cx(0, -1)) < 1e-15);
}

TEST_CASE("winding numbers of built-in curves") {
    for (const auto& curve : {circle(0.0, 1.0), circle(Cx(1, 2), 0.3), cassini_oval(1.1), cassini_oval(2.0, 3.0)}) {
        const auto pts = curve.sample(2048);
        Cx mean = 0.0;
        for (const Cx& z : pts) mean += z;
        mean /= static_cast<double>(pts.size());
        CHECK(std::abs(winding_number(pts, mean) - 1.0) < 1e-6);
        CHECK(signed_area(pts) > 0.0);
        CHECK(std::abs(winding_number(pts, mean + 100.0)) < 1e-6);
    }
}

TEST_CASE("region membership") {
    const Region disk = disk_region();
    CHECK(contains(disk, 0.0));
    CHECK_FALSE(contains(disk, 2.0));
    CHECK_THROWS_AS(contains(disk, 1.0), GeometryError);

    const Region frame = cassini_frame_region(2.0 * std::sqrt(14.0), 7.0, 2.0, 1.0);
    CHECK(frame.connectivity() == 2);
    CHECK(contains(frame, 3.0));
    CHECK_FALSE(contains(frame, 2.0));
    CHECK(frame.hole_containing(0.0) == std::optional<std::size_t>(1));
    CHECK_FALSE(frame.hole_containing(3.0).has_value());

    const Region ann = annulus_region(0.5);
    CHECK(ann.locate(0.75) == Location::interior);
    CHECK(ann.locate(0.25) == Location::exterior);
    CHECK(ann.locate(1.5) == Location::exterior);
}

TEST_CASE("region validation") {
    // hole outside the outer curve
    CHECK_THROWS_AS(Region({circle(0.0, 1.0), circle(3.0, 0.5)}), GeometryError);
    // overlapping holes
    CHECK_THROWS_AS(Region({circle(0.0, 2.0), circle(0.3, 0.5), circle(-0.3, 0.5)}), GeometryError);
    CHECK_THROWS_AS(annulus_region(1.5), GeometryError);
    CHECK_NOTHROW(Region({circle(0.0, 2.0), circle(0.8, 0.3), circle(-0.8, 0.3)}));
}
