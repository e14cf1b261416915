#include "confmap/linalg.hpp"

#include <cmath>
#include <sstream>

#include "confmap/error.hpp"

namespace confmap {

template <class Scalar>
DenseSolution<Scalar> solve_dense(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                                  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
    if (a.rows() != a.cols() || a.rows() != b.size()) {
        std::ostringstream msg;
        msg << "solve_dense: expected square system, got " << a.rows() << "x" << a.cols()
            << " with rhs of length " << b.size();
        throw SolverError(msg.str());
    }
    DenseSolution<Scalar> out;
    if (a.rows() == 0) return out;

    const double rhs_max = b.cwiseAbs().maxCoeff();
    Eigen::PartialPivLU<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> lu(a);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();

    if (min_pivot >= kPivotFloor && std::isfinite(min_pivot)) {
        out.x = lu.solve(b);
        const double rc = lu.rcond();
        if (rc > 0.0) out.cond_estimate = 1.0 / rc;
    } else {
        Eigen::CompleteOrthogonalDecomposition<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>
            cod(a);
        out.x = cod.solve(b);
        out.least_squares = true;
    }
    if (!out.x.allFinite()) throw SolverError("solve_dense: solution has non-finite entries");

    out.residual_inf = (a * out.x - b).cwiseAbs().maxCoeff();
    if (out.least_squares && out.residual_inf > 1e-6 * rhs_max) {
        std::ostringstream msg;
        msg << "solve_dense: singular matrix and least-squares residual " << out.residual_inf
            << " exceeds tolerance";
        throw SolverError(msg.str());
    }
    return out;
}

template DenseSolution<double> solve_dense(const RealMatrix&, const RealVector&);
template DenseSolution<std::complex<double>> solve_dense(const ComplexMatrix&, const ComplexVector&);

}  // namespace confmap
