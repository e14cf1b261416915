#include <doctest.h>

#include "confmap/error.hpp"
#include "confmap/linalg.hpp"

using namespace confmap;
using Cx = std::complex<double>;

TEST_CASE("real LU solve") {
    RealMatrix a(2, 2);
    a << 4, 1, 2, 3;
    RealVector b(2);
    b << 1, 2;
    const auto s = solve_dense(a, b);
    CHECK_FALSE(s.least_squares);
    CHECK(s.residual_inf < 1e-15);
    REQUIRE(s.cond_estimate.has_value());
    CHECK(*s.cond_estimate >= 1.0);
    CHECK((a * s.x - b).norm() < 1e-15);
}

TEST_CASE("complex LU solve") {
    ComplexMatrix a(2, 2);
    a << Cx(1, 1), 2.0, 0.0, Cx(0, 3);
    ComplexVector b(2);
    b << 1.0, Cx(0, 1);
    const auto s = solve_dense(a, b);
    CHECK((a * s.x - b).norm() < 1e-15);
}

TEST_CASE("singular consistent system falls back to least squares") {
    RealMatrix a = RealMatrix::Zero(2, 2);
    a(0, 0) = 1.0;
    RealVector b(2);
    b << 3.0, 0.0;
    const auto s = solve_dense(a, b);
    CHECK(s.least_squares);
    CHECK(s.x(0) == doctest::Approx(3.0));
}

TEST_CASE("singular inconsistent system throws") {
    RealMatrix a = RealMatrix::Zero(2, 2);
    a(0, 0) = 1.0;
    RealVector b(2);
    b << 3.0, 1.0;
    CHECK_THROWS_AS(solve_dense(a, b), SolverError);
}

TEST_CASE("shape mismatch") {
    RealMatrix a = RealMatrix::Identity(3, 3);
    RealVector b = RealVector::Ones(2);
    CHECK_THROWS_AS(solve_dense(a, b), SolverError);
}
