#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

namespace confmap {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

template <class Scalar>
struct DenseSolution {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
    double residual_inf = 0.0;           // max_j |(A x - b)_j|
    std::optional<double> cond_estimate;  // 1-norm estimate, LU path only
    bool least_squares = false;
};

// Pivot magnitude below which the LU path is abandoned for least squares.
inline constexpr double kPivotFloor = 1e-300;

/// Dense square solve by LU with partial pivoting. A numerically singular
/// matrix falls back to a rank-revealing least-squares solve, which throws
/// SolverError when its residual exceeds 1e-6 * max|b|.
template <class Scalar>
DenseSolution<Scalar> solve_dense(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                                  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b);

extern template DenseSolution<double> solve_dense(const RealMatrix&, const RealVector&);
extern template DenseSolution<std::complex<double>> solve_dense(const ComplexMatrix&,
                                                                const ComplexVector&);

}  // namespace confmap
